#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace resolve {

using Exponent = std::uint32_t;

/// Ordered list of distinct variable names. Names follow identifier syntax
/// ([A-Za-z_][A-Za-z0-9_]*) so that a bare integer is never a variable.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarTable&) const = default;

private:
    std::vector<std::string> names_;
};

/// Exponent vector over a fixed variable table. All zeros is the monomial 1.
/// Ordering (operator<=>) is plain lexicographic on the exponent vector and is
/// only meant for use as a map key; see canonical_before for generator order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    bool is_one() const noexcept;
    std::uint64_t total_degree() const noexcept;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Componentwise maximum. Throws DimensionError on length mismatch.
Monomial lcm(const Monomial& a, const Monomial& b);

/// True iff every exponent of a is at most the matching exponent of b.
bool divides(const Monomial& a, const Monomial& b);

/// num / den; requires divides(den, num).
Monomial quotient(const Monomial& num, const Monomial& den);

/// Throws DomainError if an exponent overflows.
Monomial product(const Monomial& a, const Monomial& b);

/// Canonical generator order: lexicographically larger exponent vector first,
/// so that with variables a, b, c we get a^2 before ab before b^3.
bool canonical_before(const Monomial& a, const Monomial& b);

/// Grammar: `term ('*' term)*`, `term := var ('^' positive-integer)?`, or `1`.
Monomial parse_monomial(std::string_view text, const VarTable& vars);

/// Juxtaposed form used on the command line: `a2b` means a^2*b. Variable
/// names are matched greedily (longest name first); a digit run after a name
/// is its exponent.
Monomial parse_compact_monomial(std::string_view text, const VarTable& vars);

/// Inverse of parse_monomial: `a^2*b`, `1` for the identity.
std::string format_monomial(const Monomial& m, const VarTable& vars);

/// Minimally generated monomial ideal. Generators are pairwise distinct,
/// pairwise non-dividing and sorted by canonical_before.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    const VarTable& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    std::size_t size() const noexcept { return gens_.size(); }
    std::span<const Monomial> generators() const noexcept { return gens_; }
    const Monomial& generator(std::size_t i) const { return gens_.at(i); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

    /// mu in I iff some generator divides mu.
    bool contains(const Monomial& mu) const;

    bool operator==(const MonomialIdeal&) const = default;

    friend MonomialIdeal minimalize_generators(VarTable vars, std::vector<Monomial> raw);

private:
    VarTable vars_;
    std::vector<Monomial> gens_;
};

MonomialIdeal minimalize_generators(VarTable vars, std::vector<Monomial> raw);

/// Resolution constructors accept only proper nonzero ideals.
void require_nontrivial(const MonomialIdeal& ideal);

/// Ideal file: `#` comments, a `vars: a b c` directive, then one monomial per line.
MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal read_ideal_file(const std::filesystem::path& path);

/// Canonical text form; parse_ideal(serialize_ideal(I)) == I and
/// serialize_ideal is a fixed point of that round trip.
std::string serialize_ideal(const MonomialIdeal& ideal);

}  // namespace resolve

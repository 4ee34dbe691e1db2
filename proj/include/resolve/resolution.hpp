#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resolve/complex.hpp"
#include "resolve/lattice.hpp"
#include "resolve/linalg.hpp"

namespace resolve {

/// Exact scalar part of a differential entry. Constructions only produce
/// integers; minimization over the rationals may produce fractions, and over
/// GF(p) coefficients are kept as representatives in [0, p).
using Coefficient = mpq_class;

/// Basis element of a free module: a Taylor symbol [F] with multidegree
/// lcm(F). The face is optional so that formal symbols can be represented.
struct BasisSymbol {
    std::optional<Face> face;
    Monomial mdeg;

    bool operator==(const BasisSymbol&) const = default;
};

/// One nonzero entry of a differential F_{i+1} -> F_i: column `col` is the
/// source symbol, row `row` the target, and the entry is coef * mono.
struct DiffEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    Coefficient coef;
    Monomial mono;

    bool operator==(const DiffEntry&) const = default;
};

/// Homogeneous complex of free multigraded modules augmented to S/I:
///     ... -> F_2 -> F_1 -> F_0 = S[empty] -> S/I.
/// diffs()[i] holds the entries of F_{i+1} -> F_i, sorted by (col, row).
class FreeComplex {
public:
    FreeComplex(std::vector<std::vector<BasisSymbol>> modules, std::vector<std::vector<DiffEntry>> diffs,
                std::vector<Monomial> ideal_generators, FieldSpec field = FieldSpec::rationals());

    const std::vector<std::vector<BasisSymbol>>& modules() const noexcept { return modules_; }
    const std::vector<std::vector<DiffEntry>>& diffs() const noexcept { return diffs_; }
    const std::vector<BasisSymbol>& module(std::size_t i) const { return modules_.at(i); }
    const std::vector<DiffEntry>& diff(std::size_t i) const { return diffs_.at(i); }

    /// Minimal generators of I (the augmentation target S/I).
    const std::vector<Monomial>& ideal_generators() const noexcept { return ideal_gens_; }
    /// Field in which the coefficients are to be read.
    const FieldSpec& field() const noexcept { return field_; }

    /// Module ranks with trailing zero modules trimmed (F_0 always kept).
    std::vector<std::size_t> ranks() const;

    /// Coefficient of the entry from source symbol col of F_{i+1} to target
    /// symbol row of F_i, or nullptr when the entry is zero.
    const DiffEntry* entry(std::size_t i, std::size_t row, std::size_t col) const;

    /// Index of the symbol with the given face in F_i, if present.
    std::optional<std::size_t> find_symbol(std::size_t i, Face face) const;

    bool operator==(const FreeComplex&) const = default;

private:
    std::vector<std::vector<BasisSymbol>> modules_;
    std::vector<std::vector<DiffEntry>> diffs_;
    std::vector<Monomial> ideal_gens_;
    FieldSpec field_;
};

/// Census of basis symbols by (homological index, multidegree).
using RankTable = std::map<std::pair<std::size_t, Monomial>, std::size_t>;
RankTable rank_table(const FreeComplex& complex);

// -- constructions ----------------------------------------------------------

/// Taylor resolution: basis all subsets of the generators, entry for a facet
/// G of F equal to sign(F,G) * lcm(F)/lcm(G).
FreeComplex taylor(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);

/// Taylor complex on an arbitrary (possibly redundant) list of nonunit
/// monomials; faces index into the list.
FreeComplex taylor_on(const std::vector<Monomial>& generators, std::size_t max_gens = kDefaultMaxGens);

/// Complex associated to a simplicial complex on an ideal's generators.
FreeComplex complex_of(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals());

/// Taylor resolution rebuilt as an iterated mapping cone of multiplication by
/// the last generator. Comparison maps are lifted strand by strand over Q.
FreeComplex mapping_cone_taylor(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);

// -- criteria ---------------------------------------------------------------

/// Outcome of the restriction-homology test. On failure, witness is the
/// first lattice point mu whose restriction has reduced homology, degree the
/// topological degree and dimension its dimension.
struct SupportVerdict {
    bool supported = true;
    std::optional<Monomial> witness;
    int degree = 0;
    std::size_t dimension = 0;
    FieldSpec field;
};

/// Gamma supports a resolution iff every restriction Gamma_{<=mu}, mu in the
/// lcm lattice of nonempty generator sets, has vanishing reduced homology.
SupportVerdict supports_resolution(const SimplicialComplex& complex, const FieldSpec& field = FieldSpec::rationals());

/// Degree-mu strand of a free complex as a complex of vector spaces.
/// Position 0 is (S/I)_mu (k when mu is not in I, else 0) and position i+1 is
/// (F_i)_mu, spanned by symbols whose multidegree divides mu. maps[j] has one
/// row per basis vector of position j+1 and one column per basis vector of
/// position j. Rational columns are rescaled to integers (rank preserving).
struct Strand {
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> maps;

    /// Homology dimension at each position.
    std::vector<std::size_t> homology(const FieldSpec& field) const;
    bool is_exact(const FieldSpec& field) const;
};

Strand strand(const FreeComplex& complex, const Monomial& mu);

/// Strand exactness at every point of the lcm lattice of the augmentation
/// ideal (bottom included); returns the first non-exact point.
std::optional<Monomial> first_inexact_strand(const FreeComplex& complex, const FieldSpec& field);

struct MinimalityReport {
    bool minimal = true;
    std::size_t index = 0;  // witness lives in diffs()[index]
    std::optional<DiffEntry> witness;
};

/// Minimal iff no entry with nonzero coefficient has monomial part 1.
MinimalityReport is_minimal(const FreeComplex& complex);

struct MinimizeOptions {
    /// When set, pivots are drawn uniformly at random from all admissible
    /// unit entries instead of smallest (index, multidegree) first.
    std::optional<std::uint64_t> shuffle_seed;
    /// Check strand exactness before cancelling (DomainError if not exact).
    bool verify_exact = false;
};

/// Consecutive cancellation of unit entries over the given field until the
/// complex is minimal. Surviving symbols keep their face labels.
FreeComplex minimize(const FreeComplex& complex, const FieldSpec& field = FieldSpec::rationals(),
                     const MinimizeOptions& options = {});

// -- structural invariants --------------------------------------------------

/// Empty when every entry satisfies mono == mdeg(col) / mdeg(row); otherwise a
/// description of the first violation.
std::optional<std::string> homogeneity_violation(const FreeComplex& complex);

/// Symbolic product of consecutive signed-monomial matrices; empty when every
/// composite vanishes over the complex's field.
std::optional<std::string> d_squared_violation(const FreeComplex& complex);

}  // namespace resolve

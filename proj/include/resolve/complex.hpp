#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resolve/monomial.hpp"

namespace resolve {

/// Default cap on the number of generators for anything that enumerates the
/// full simplex (2^r faces). Overridable through --max-gens.
inline constexpr std::size_t kDefaultMaxGens = 16;

/// Faces are 64-bit masks, so no cap may exceed this.
inline constexpr std::size_t kHardMaxGens = 63;

/// Subset of generator indices, stored as a bitmask.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t mask) : mask_(mask) {}
    Face(std::initializer_list<std::size_t> members);
    static Face from_indices(std::span<const std::size_t> members);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr std::size_t order() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
    constexpr bool is_subset_of(Face other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    constexpr Face with(std::size_t i) const noexcept { return Face(mask_ | (std::uint64_t{1} << i)); }
    constexpr Face without(std::size_t i) const noexcept { return Face(mask_ & ~(std::uint64_t{1} << i)); }
    constexpr Face operator&(Face o) const noexcept { return Face(mask_ & o.mask_); }
    constexpr Face operator|(Face o) const noexcept { return Face(mask_ | o.mask_); }

    /// Members in increasing index order.
    std::vector<std::size_t> indices() const;

    constexpr auto operator<=>(const Face&) const = default;

private:
    std::uint64_t mask_ = 0;
};

/// Canonical face order: by cardinality, then lexicographically on the
/// increasing index lists ({0,1} < {0,2} < {1,2}).
bool canonical_less(Face a, Face b) noexcept;

/// lcm of the member generators; the empty face has multidegree 1.
Monomial mdeg(Face face, const MonomialIdeal& ideal);

/// Construction sign: +1 when G is F minus its j-th member (1-based) with j
/// odd, -1 with j even, 0 when G is not a facet of F.
int orientation_sign(Face f, Face g) noexcept;

/// Downward-closed family of faces on the generators of an ideal, with every
/// face's multidegree cached. Faces are kept in canonical order.
///
/// The only complex without the empty face is the void complex produced by
/// restrict_lt(Gamma, 1); every other complex contains it.
class SimplicialComplex {
public:
    /// Validates indices and downward closure (ParseError / DomainError).
    static SimplicialComplex from_faces(std::shared_ptr<const MonomialIdeal> ideal, std::vector<Face> faces);

    const MonomialIdeal& ideal() const noexcept { return *ideal_; }
    const std::shared_ptr<const MonomialIdeal>& ideal_ptr() const noexcept { return ideal_; }

    std::span<const Face> faces() const noexcept { return faces_; }
    std::span<const Monomial> multidegrees() const noexcept { return mdegs_; }
    std::size_t size() const noexcept { return faces_.size(); }
    bool contains(Face f) const;

    /// Number of faces of each order 0..max order (the augmented f-vector).
    std::vector<std::size_t> f_vector() const;
    /// Largest face order, or -1 for the void complex.
    int max_order() const noexcept;

    bool same_faces(const SimplicialComplex& other) const noexcept { return faces_ == other.faces_; }

    /// Builds from an already-closed canonical face list without re-checking.
    static SimplicialComplex trusted(std::shared_ptr<const MonomialIdeal> ideal, std::vector<Face> faces,
                                     std::vector<Monomial> mdegs);

private:
    SimplicialComplex() = default;

    std::shared_ptr<const MonomialIdeal> ideal_;
    std::vector<Face> faces_;
    std::vector<Monomial> mdegs_;
};

/// Throws ResourceError citing --max-gens when r exceeds the cap.
void require_gen_cap(const MonomialIdeal& ideal, std::size_t max_gens);

SimplicialComplex full_simplex(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);
SimplicialComplex full_simplex(std::shared_ptr<const MonomialIdeal> ideal, std::size_t max_gens = kDefaultMaxGens);

/// Faces whose multidegree divides mu.
SimplicialComplex restrict_leq(const SimplicialComplex& complex, const Monomial& mu);

/// Faces whose multidegree divides mu and differs from it.
SimplicialComplex restrict_lt(const SimplicialComplex& complex, const Monomial& mu);

bool is_closed(std::span<const Face> faces);
SimplicialComplex close_downward(std::span<const Face> faces, std::shared_ptr<const MonomialIdeal> ideal);

/// Throws DimensionError when the complexes live on different ideals.
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);

/// Face-set file: one face per line as comma-separated 0-based indices, `()`
/// for the empty face; blank lines and `#` comments are skipped.
std::vector<Face> parse_face_set(std::string_view text);
std::vector<Face> read_face_file(const std::string& path);
std::string format_face_set(std::span<const Face> faces);
std::string format_face(Face face, const MonomialIdeal& ideal);

}  // namespace resolve

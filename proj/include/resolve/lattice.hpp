#pragma once

#include <cstddef>
#include <vector>

#include "resolve/complex.hpp"

namespace resolve {

/// The lcm lattice {lcm(F) : F a subset of the generators}, bottom element 1
/// included. Points are sorted by total degree, then canonical_before, so
/// iteration order is deterministic and every point follows its divisors.
struct LcmLattice {
    std::vector<Monomial> points;

    std::size_t size() const noexcept { return points.size(); }
    bool contains(const Monomial& m) const;
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);

/// Lattice points realized by a nonempty face (the lattice minus the bottom 1).
std::vector<Monomial> nonempty_lattice_points(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);

/// Sort order used for lattice points and Betti tables.
bool degree_then_canonical(const Monomial& a, const Monomial& b);

}  // namespace resolve

#pragma once

#include <vector>

#include "resolve/complex.hpp"
#include "resolve/linalg.hpp"
#include "resolve/resolution.hpp"

namespace resolve {

/// Faces of the full simplex whose multidegree no other face shares, together
/// with those (Scarf) multidegrees.
struct ScarfData {
    SimplicialComplex complex;
    std::vector<Monomial> multidegrees;  // parallel to complex.faces()
};

/// Multiplicities are counted over all 2^r faces of the full simplex. Throws
/// std::logic_error if the resulting face set were ever not downward closed.
ScarfData scarf_complex(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);

/// The ideal is Scarf iff its Scarf complex supports a resolution over the field.
SupportVerdict is_scarf(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                        std::size_t max_gens = kDefaultMaxGens);

/// The complex associated to the Scarf complex has no unit entries.
bool scarf_minimality_certificate(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);

/// Betti numbers at Scarf multidegrees are 1 in homological index |G| and 0
/// elsewhere; non-Scarf lattice points strictly dividing a Scarf multidegree
/// carry no Betti numbers at all.
bool scarf_betti_certificate(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                             std::size_t max_gens = kDefaultMaxGens);

}  // namespace resolve

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resolve/lattice.hpp"
#include "resolve/linalg.hpp"

namespace resolve {

/// Multigraded Betti numbers of S/I over a field. Only nonzero entries are
/// stored; entry (0, 1) is always 1.
struct BettiTable {
    FieldSpec field;
    std::map<std::pair<std::size_t, Monomial>, std::size_t> entries;

    std::size_t at(std::size_t index, const Monomial& mu) const;
    /// Sum over multidegrees per homological index, trailing zeros trimmed.
    std::vector<std::size_t> totals() const;

    bool same_entries(const BettiTable& other) const { return entries == other.entries; }
};

/// Rank census of the minimized Taylor resolution.
BettiTable betti_numbers(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                         std::size_t max_gens = kDefaultMaxGens);

/// b_{i,mu} = dim H~_{i-2}(Delta_{<mu}) for every lattice point mu != 1, plus b_{0,1} = 1.
BettiTable betti_via_homology(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                              std::size_t max_gens = kDefaultMaxGens);

/// Shift to the Betti table of I itself (index i of S/I becomes i-1; (0,1) dropped).
BettiTable shift_to_ideal(const BettiTable& table);

/// Confirms that the two computation paths agree on the three reference
/// ideals (a,b^2,c^3), (a^2,ab,b^3), (ab,ac,bc). Throws std::logic_error on
/// disagreement; run before trusting betti_via_homology's index shift.
void calibrate_betti_index_shift(const FieldSpec& field = FieldSpec::rationals());

}  // namespace resolve

#include "resolve/betti.hpp"

#include <stdexcept>

#include "resolve/complex.hpp"
#include "resolve/resolution.hpp"

namespace resolve {

std::size_t BettiTable::at(std::size_t index, const Monomial& mu) const {
    auto it = entries.find({index, mu});
    return it == entries.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const {
    std::vector<std::size_t> out;
    for (const auto& [key, value] : entries) {
        if (out.size() <= key.first) out.resize(key.first + 1, 0);
        out[key.first] += value;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BettiTable betti_numbers(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t max_gens) {
    FreeComplex minimal = minimize(taylor(ideal, max_gens), field);
    BettiTable table;
    table.field = field;
    for (const auto& [key, count] : rank_table(minimal))
        if (count != 0) table.entries[key] = count;
    return table;
}

BettiTable betti_via_homology(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t max_gens) {
    require_nontrivial(ideal);
    auto delta = full_simplex(ideal, max_gens);
    BettiTable table;
    table.field = field;
    table.entries[{0, Monomial(ideal.nvars())}] = 1;
    for (const Monomial& mu : nonempty_lattice_points(ideal, max_gens)) {
        auto h = reduced_homology_dims(restrict_lt(delta, mu), field);
        // Topological degree d contributes to homological index d + 2.
        for (std::size_t k = 0; k < h.dims.size(); ++k)
            if (h.dims[k] != 0) table.entries[{k + 1, mu}] = h.dims[k];
    }
    return table;
}

BettiTable shift_to_ideal(const BettiTable& table) {
    BettiTable out;
    out.field = table.field;
    for (const auto& [key, value] : table.entries)
        if (key.first >= 1) out.entries[{key.first - 1, key.second}] = value;
    return out;
}

void calibrate_betti_index_shift(const FieldSpec& field) {
    VarTable abc({"a", "b", "c"});
    const std::vector<std::vector<Monomial>> references{
        {Monomial{1, 0, 0}, Monomial{0, 2, 0}, Monomial{0, 0, 3}},
        {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{0, 3, 0}},
        {Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}},
    };
    for (const auto& gens : references) {
        auto ideal = minimalize_generators(abc, gens);
        if (!betti_numbers(ideal, field).same_entries(betti_via_homology(ideal, field)))
            throw std::logic_error("Betti index shift disagrees with the minimized Taylor resolution for " +
                                   serialize_ideal(ideal));
    }
}

}  // namespace resolve

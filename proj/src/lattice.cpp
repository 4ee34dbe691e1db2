#include "resolve/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace resolve {

bool degree_then_canonical(const Monomial& a, const Monomial& b) {
    auto da = a.total_degree();
    auto db = b.total_degree();
    if (da != db) return da < db;
    return canonical_before(a, b);
}

bool LcmLattice::contains(const Monomial& m) const {
    return std::binary_search(points.begin(), points.end(), m, degree_then_canonical);
}

namespace {

std::vector<Monomial> subset_lcms(const MonomialIdeal& ideal, std::size_t max_gens, bool with_bottom) {
    require_gen_cap(ideal, max_gens);
    const std::size_t r = ideal.size();
    const std::uint64_t count = std::uint64_t{1} << r;
    std::vector<Monomial> by_mask(count);
    by_mask[0] = Monomial(ideal.nvars());
    std::unordered_set<Monomial, MonomialHash> seen;
    if (with_bottom) seen.insert(by_mask[0]);
    for (std::uint64_t m = 1; m < count; ++m) {
        auto low = static_cast<std::size_t>(std::countr_zero(m));
        by_mask[m] = lcm(by_mask[m & (m - 1)], ideal.generator(low));
        seen.insert(by_mask[m]);
    }
    std::vector<Monomial> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), degree_then_canonical);
    return out;
}

}  // namespace

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t max_gens) {
    return LcmLattice{subset_lcms(ideal, max_gens, true)};
}

std::vector<Monomial> nonempty_lattice_points(const MonomialIdeal& ideal, std::size_t max_gens) {
    return subset_lcms(ideal, max_gens, false);
}

}  // namespace resolve

#include "resolve/scarf.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "resolve/betti.hpp"

namespace resolve {

ScarfData scarf_complex(const MonomialIdeal& ideal, std::size_t max_gens) {
    auto ptr = std::make_shared<const MonomialIdeal>(ideal);
    auto delta = full_simplex(ptr, max_gens);

    std::unordered_map<Monomial, std::size_t, MonomialHash> multiplicity;
    for (const Monomial& d : delta.multidegrees()) ++multiplicity[d];

    std::vector<Face> faces;
    std::vector<Monomial> mdegs;
    for (std::size_t k = 0; k < delta.size(); ++k) {
        if (multiplicity[delta.multidegrees()[k]] != 1) continue;
        faces.push_back(delta.faces()[k]);
        mdegs.push_back(delta.multidegrees()[k]);
    }
    if (!is_closed(faces)) throw std::logic_error("Scarf face set is not downward closed");
    auto complex = SimplicialComplex::trusted(std::move(ptr), std::move(faces), mdegs);
    return ScarfData{std::move(complex), std::move(mdegs)};
}

SupportVerdict is_scarf(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t max_gens) {
    return supports_resolution(scarf_complex(ideal, max_gens).complex, field);
}

bool scarf_minimality_certificate(const MonomialIdeal& ideal, std::size_t max_gens) {
    return is_minimal(complex_of(scarf_complex(ideal, max_gens).complex)).minimal;
}

bool scarf_betti_certificate(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t max_gens) {
    ScarfData scarf = scarf_complex(ideal, max_gens);
    BettiTable betti = betti_numbers(ideal, field, max_gens);
    const std::size_t top = ideal.size() + 1;

    for (std::size_t k = 0; k < scarf.complex.size(); ++k) {
        const Monomial& m = scarf.multidegrees[k];
        std::size_t order = scarf.complex.faces()[k].order();
        for (std::size_t i = 0; i <= top; ++i)
            if (betti.at(i, m) != (i == order ? 1u : 0u)) return false;
    }

    for (const Monomial& mu : lcm_lattice(ideal, max_gens).points) {
        bool scarf_point = std::find(scarf.multidegrees.begin(), scarf.multidegrees.end(), mu) != scarf.multidegrees.end();
        if (scarf_point) continue;
        bool under_scarf = std::any_of(scarf.multidegrees.begin(), scarf.multidegrees.end(),
                                       [&](const Monomial& s) { return s != mu && divides(mu, s); });
        if (!under_scarf) continue;
        for (std::size_t i = 0; i <= top; ++i)
            if (betti.at(i, mu) != 0) return false;
    }
    return true;
}

}  // namespace resolve

#include "resolve/corpus.hpp"

#include <algorithm>
#include <string>

namespace resolve {

MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusShape& shape) {
    std::uniform_int_distribution<std::size_t> pick_vars(2, std::max<std::size_t>(2, shape.max_vars));
    std::uniform_int_distribution<std::size_t> pick_gens(shape.min_gens, shape.max_gens);
    std::uniform_int_distribution<Exponent> pick_exp(0, shape.max_exponent);

    while (true) {
        const std::size_t n = pick_vars(rng);
        const std::size_t target = pick_gens(rng);
        std::vector<std::string> names;
        for (std::size_t v = 0; v < n; ++v) names.push_back(std::string(1, static_cast<char>('a' + v)));

        std::vector<Monomial> gens;
        for (int attempt = 0; attempt < 200 && gens.size() < target; ++attempt) {
            std::vector<Exponent> exps(n);
            for (auto& e : exps) e = pick_exp(rng);
            Monomial m(std::move(exps));
            if (m.is_one()) continue;
            bool comparable = std::any_of(gens.begin(), gens.end(),
                                          [&](const Monomial& g) { return divides(g, m) || divides(m, g); });
            if (!comparable) gens.push_back(std::move(m));
        }
        if (gens.size() >= shape.min_gens) return minimalize_generators(VarTable(names), std::move(gens));
    }
}

std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count, const CorpusShape& shape) {
    std::mt19937_64 rng(seed);
    std::vector<MonomialIdeal> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_ideal(rng, shape));
    return out;
}

}  // namespace resolve

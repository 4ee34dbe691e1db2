#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "resolve/monomial.hpp"

namespace resolve {

/// Shape of randomly generated test ideals.
struct CorpusShape {
    std::size_t max_vars = 4;
    Exponent max_exponent = 4;
    std::size_t min_gens = 2;
    std::size_t max_gens = 6;
};

/// One random minimally generated ideal with between min_gens and max_gens
/// generators, over 2..max_vars variables named a, b, c, ...
MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusShape& shape = {});

/// `count` ideals drawn from one seeded generator; identical seeds give
/// identical corpora.
std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count, const CorpusShape& shape = {});

}  // namespace resolve

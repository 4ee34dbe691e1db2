#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracle.hpp"
#include "resolve/corpus.hpp"
#include "resolve/errors.hpp"
#include "resolve/lattice.hpp"
#include "resolve/lyubeznik.hpp"
#include "resolve/resolution.hpp"
#include "resolve/scarf.hpp"
#include "support.hpp"

using namespace resolve;
using fixtures::mono;

namespace {

std::set<std::uint64_t> masks(const SimplicialComplex& c) {
    std::set<std::uint64_t> out;
    for (Face f : c.faces()) out.insert(f.mask());
    return out;
}

}  // namespace

TEST_CASE("Scarf complex of (a^2, ab, b^3)") {
    auto i = fixtures::example_33();
    auto s = scarf_complex(i);
    CHECK(s.complex.f_vector() == std::vector<std::size_t>{1, 3, 2});
    CHECK(s.complex.contains(Face{0, 1}));
    CHECK(s.complex.contains(Face{1, 2}));
    CHECK(s.multidegrees[4] == mono(i, "a^2*b"));
    auto v = is_scarf(i);
    CHECK(v.supported);
    CHECK(minimize(taylor(i)).ranks() == std::vector<std::size_t>{1, 3, 2});
    CHECK(complex_of(s.complex).ranks() == std::vector<std::size_t>{1, 3, 2});
    CHECK(scarf_minimality_certificate(i));
}

TEST_CASE("Scarf complex of (ab, ac, bc)") {
    auto i = fixtures::example_53();
    auto s = scarf_complex(i);
    CHECK(s.complex.f_vector() == std::vector<std::size_t>{1, 3});
    auto v = is_scarf(i);
    CHECK_FALSE(v.supported);
    REQUIRE(v.witness);
    CHECK(*v.witness == mono(i, "a*b*c"));
    CHECK(v.degree == 0);
    CHECK(v.dimension == 2);
    CHECK(scarf_minimality_certificate(i));
}

TEST_CASE("Scarf complexes match the brute-force definition") {
    for (const auto& ideal : random_corpus(31, 80)) {
        std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
        auto s = scarf_complex(ideal);
        CHECK(masks(s.complex) == oracle::scarf_faces(gens));
        CHECK(is_closed(s.complex.faces()));
        CHECK(scarf_minimality_certificate(ideal));
        CHECK(scarf_betti_certificate(ideal));
        CHECK(scarf_betti_certificate(ideal, FieldSpec::prime(2)));
    }
}

TEST_CASE("generic ideals are Scarf") {
    // Distinct nonzero exponents in every variable make the ideal generic.
    auto i = fixtures::ideal("vars: a b c\na^3*b\nb^3*c^2\na*c^3\na^2*b^2*c\n");
    CHECK(is_scarf(i).supported);
    CHECK(complex_of(scarf_complex(i).complex).ranks() == minimize(taylor(i)).ranks());
}

TEST_CASE("total orders") {
    CHECK_THROWS_AS(TotalOrder({0, 0}), DomainError);
    CHECK_THROWS_AS(TotalOrder({0, 2}), DomainError);
    TotalOrder o({2, 0, 1});
    CHECK(o.rank_of(2) == 0);
    CHECK(o.rank_of(1) == 2);
    CHECK(TotalOrder::identity(3).perm() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("min label and rootedness") {
    auto i = fixtures::example_33();
    TotalOrder o({1, 0, 2});
    CHECK(min_label(mono(i, "a^2*b"), o, i) == 1);
    CHECK(min_label(mono(i, "a^2"), o, i) == 0);
    CHECK_THROWS_AS(min_label(mono(i, "a"), o, i), DomainError);
    CHECK(is_rooted(Face{0, 1}, o, i));
    CHECK_FALSE(is_rooted(Face{0, 2}, o, i));
    CHECK_FALSE(is_rooted(Face{0, 1, 2}, o, i));
    CHECK(is_rooted(Face{0, 1, 2}, TotalOrder::identity(3), i));
    CHECK_THROWS_AS(lyubeznik_complex(i, TotalOrder({0, 1})), DimensionError);
}

TEST_CASE("Lyubeznik census of (ab, ac, bc)") {
    auto i = fixtures::example_53();
    auto classes = all_lyubeznik_complexes(i);
    REQUIRE(classes.size() == 3);
    for (const auto& c : classes) {
        CHECK(c.orders.size() == 2);
        CHECK(c.complex.f_vector() == std::vector<std::size_t>{1, 3, 2});
        CHECK(supports_resolution(c.complex).supported);
        CHECK(is_minimal(complex_of(c.complex)).minimal);
    }
}

TEST_CASE("Lyubeznik census of (a^2, ab, b^3)") {
    auto i = fixtures::example_33();
    auto classes = all_lyubeznik_complexes(i);
    REQUIRE(classes.size() == 2);
    auto scarf = scarf_complex(i).complex;
    auto full = full_simplex(i);
    std::vector<std::size_t> counts;
    for (const auto& c : classes) {
        if (c.complex.same_faces(scarf)) CHECK(c.orders.size() == 2);
        else if (c.complex.same_faces(full)) CHECK(c.orders.size() == 4);
        else FAIL("unexpected Lyubeznik complex");
        counts.push_back(c.orders.size());
    }
    CHECK(std::accumulate(counts.begin(), counts.end(), std::size_t{0}) == 6);
    // ab smallest gives the Scarf complex
    CHECK(lyubeznik_complex(i, TotalOrder({1, 0, 2})).same_faces(scarf));
    CHECK(lyubeznik_complex(i, TotalOrder({0, 1, 2})).same_faces(full));
}

TEST_CASE("order cap") {
    auto i = fixtures::example_53();
    CHECK_THROWS_AS(all_lyubeznik_complexes(i, 5), ResourceError);
    CHECK_NOTHROW(all_lyubeznik_complexes(i, 6));
}

TEST_CASE("Lyubeznik complexes match the definition and support resolutions") {
    for (const auto& ideal : random_corpus(41, 40)) {
        std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
        std::vector<std::size_t> perm(ideal.size());
        std::iota(perm.begin(), perm.end(), 0);
        auto scarf = scarf_complex(ideal).complex;
        auto full = full_simplex(ideal);
        int budget = 24;
        do {
            TotalOrder o(perm);
            auto lambda = lyubeznik_complex(ideal, o);
            CHECK(masks(lambda) == oracle::rooted_faces(gens, perm));
            CHECK(intersect(lambda, scarf).same_faces(scarf));
            CHECK(intersect(lambda, full).same_faces(lambda));
            for (Face f : lambda.faces()) CHECK(is_rooted(f, o, ideal));
            auto v = lyubeznik_supports(ideal, o, FieldSpec::prime(2));
            CHECK(v.support.supported);
            CHECK(v.cone_certificate);
        } while (std::next_permutation(perm.begin(), perm.end()) && --budget > 0);
    }
}

TEST_CASE("cone check") {
    auto i = fixtures::share(fixtures::linear_abc());
    auto cone = close_downward(std::vector<Face>{Face{0, 1}, Face{0, 2}}, i);
    CHECK(is_cone_over(cone, 0));
    CHECK_FALSE(is_cone_over(cone, 1));
}

TEST_CASE("intersection theorem on the reference ideals") {
    for (const auto& ideal : {fixtures::example_32(), fixtures::example_33(), fixtures::example_53()}) {
        auto report = verify_intersection_theorem(ideal);
        CHECK(report.holds);
        CHECK(report.only_in_intersection.empty());
        CHECK(report.only_in_scarf.empty());
        CHECK(report.intersection.same_faces(scarf_complex(ideal).complex));
    }
    CHECK(lyubeznik_intersection(fixtures::example_53()).size() == 4);
}

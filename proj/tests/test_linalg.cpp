#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "resolve/complex.hpp"
#include "resolve/corpus.hpp"
#include "resolve/errors.hpp"
#include "resolve/linalg.hpp"
#include "support.hpp"

using namespace resolve;

namespace {

// Six-vertex triangulation of the real projective plane.
const std::vector<oracle::Simplex> kProjectivePlane{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                                    {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};

// Vertices become the generators x1..x6 of a squarefree ideal.
SimplicialComplex projective_plane() {
    auto ideal = fixtures::share(fixtures::ideal("vars: x1 x2 x3 x4 x5 x6\nx1\nx2\nx3\nx4\nx5\nx6\n"));
    std::vector<Face> facets;
    for (const auto& t : kProjectivePlane) {
        std::vector<std::size_t> idx;
        for (int v : t) idx.push_back(static_cast<std::size_t>(v - 1));
        facets.push_back(Face::from_indices(idx));
    }
    return close_downward(facets, ideal);
}

oracle::Dense to_dense(const ExactMatrix& m) {
    oracle::Dense d(m.rows(), std::vector<mpz_class>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto [c, v] : m.row(r)) d[r][c] = static_cast<long>(v);
    return d;
}

}  // namespace

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("rat").is_rational());
    CHECK(FieldSpec::parse("gf:2").characteristic() == 2);
    CHECK(FieldSpec::parse("gf:2147483647").characteristic() == 2147483647u);
    CHECK(FieldSpec::prime(3).to_string() == "gf:3");
    CHECK(FieldSpec::rationals().to_string() == "rat");
    CHECK_THROWS_AS(FieldSpec::parse("gf:4"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("gf:"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("real"), ParseError);
    CHECK_THROWS_AS(FieldSpec::prime(2147483659u), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime(1), DomainError);
}

TEST_CASE("sparse matrix storage") {
    ExactMatrix m(2, 3);
    m.add(0, 2, 5);
    m.add(0, 2, -5);
    m.add(1, 0, 7);
    CHECK(m.nonzeros() == 1);
    CHECK(m.at(1, 0) == 7);
    CHECK(m.at(0, 2) == 0);
    CHECK_THROWS_AS(m.add(2, 0, 1), DimensionError);
    CHECK(rank(ExactMatrix::identity(4), FieldSpec::prime(5)) == 4);
}

TEST_CASE("rank depends on the characteristic") {
    ExactMatrix m(2, 2);
    m.add(0, 0, 1);
    m.add(0, 1, 1);
    m.add(1, 0, 1);
    m.add(1, 1, -1);
    CHECK(rank(m, FieldSpec::rationals()) == 2);
    CHECK(rank(m, FieldSpec::prime(2)) == 1);
}

TEST_CASE("rank agrees with a dense oracle on random integer matrices") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dim(1, 9), val(-3, 3), sparse(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        ExactMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (sparse(rng) == 0) m.add(r, c, val(rng));
        auto d = to_dense(m);
        CHECK(rank(m, FieldSpec::rationals()) == oracle::rank_q(d));
        CHECK(rank(m, FieldSpec::prime(2)) == oracle::rank_p(d, 2));
        CHECK(rank(m, FieldSpec::prime(3)) == oracle::rank_p(d, 3));
    }
}

TEST_CASE("rank survives 64-bit overflow during elimination") {
    // Entries near 2^40 force fraction-free products past int64.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> val(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix m(6, 6);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 6; ++c) m.add(r, c, val(rng));
        auto d = to_dense(m);
        CHECK(rank(m, FieldSpec::rationals()) == oracle::rank_q(d));
    }
    ExactMatrix big(3, 3);
    const std::int64_t h = std::int64_t{1} << 40;
    big.add(0, 0, h);
    big.add(0, 1, h + 1);
    big.add(1, 0, h + 1);
    big.add(1, 1, h + 2);
    big.add(2, 0, 2 * h + 1);
    big.add(2, 1, 2 * h + 3);
    CHECK(rank(big, FieldSpec::rationals()) == 2);
}

TEST_CASE("boundary matrices square to zero") {
    auto c = projective_plane();
    for (std::size_t s = 2; s <= 3; ++s) {
        auto hi = to_dense(boundary_matrix(c, s));
        auto lo = to_dense(boundary_matrix(c, s - 1));
        for (std::size_t r = 0; r < hi.size(); ++r)
            for (std::size_t k = 0; k < lo[0].size(); ++k) {
                mpz_class sum = 0;
                for (std::size_t j = 0; j < lo.size(); ++j) sum += hi[r][j] * lo[j][k];
                CHECK(sum == 0);
            }
    }
    CHECK_THROWS_AS(boundary_matrix(c, 0), DomainError);
}

TEST_CASE("projective plane homology depends on the field") {
    auto integral = oracle::integral_reduced_homology(kProjectivePlane, 1);
    REQUIRE(integral.free_rank == 0);
    REQUIRE(integral.torsion == std::vector<mpz_class>{2});
    CHECK(oracle::integral_reduced_homology(kProjectivePlane, 2).free_rank == 0);
    CHECK(oracle::integral_reduced_homology(kProjectivePlane, 0).free_rank == 0);

    auto c = projective_plane();
    CHECK(c.f_vector() == std::vector<std::size_t>{1, 6, 15, 10});
    auto q = reduced_homology_dims(c, FieldSpec::rationals());
    auto two = reduced_homology_dims(c, FieldSpec::prime(2));
    auto three = reduced_homology_dims(c, FieldSpec::prime(3));
    CHECK(q.at(1) == 0);
    CHECK(two.at(1) == 1);
    CHECK(two.at(2) == 1);
    CHECK(q.at(2) == 0);
    CHECK(three.is_zero());
    CHECK(is_acyclic(c, FieldSpec::rationals()));
    CHECK_FALSE(is_acyclic(c, FieldSpec::prime(2)));
    CHECK(two.first_nonzero_degree() == 1);
}

TEST_CASE("reduced homology of small complexes") {
    auto i = fixtures::share(fixtures::linear_abc());
    auto pts = close_downward(std::vector<Face>{Face{0}, Face{2}}, i);
    auto h = reduced_homology_dims(pts, FieldSpec::rationals());
    CHECK(h.at(0) == 1);
    CHECK(h.at(-1) == 0);
    auto empty_only = close_downward(std::vector<Face>{Face{}}, i);
    CHECK(reduced_homology_dims(empty_only, FieldSpec::rationals()).at(-1) == 1);
    auto boundary_triangle = close_downward(std::vector<Face>{Face{0, 1}, Face{1, 2}, Face{0, 2}}, i);
    CHECK(reduced_homology_dims(boundary_triangle, FieldSpec::prime(7)).at(1) == 1);
    auto simplex = full_simplex(*i);
    CHECK(reduced_homology_dims(simplex, FieldSpec::rationals()).is_zero());
    auto void_complex = restrict_lt(simplex, Monomial(3));
    CHECK(reduced_homology_dims(void_complex, FieldSpec::rationals()).is_zero());
}

TEST_CASE("homology agrees with a dense oracle on random complexes") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<int> nv(3, 6), nf(1, 6);
        const int n = nv(rng);
        std::vector<oracle::Simplex> facets;
        std::vector<Face> faces;
        for (int k = 0, m = nf(rng); k < m; ++k) {
            oracle::Simplex s;
            std::vector<std::size_t> idx;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) s.push_back(v), idx.push_back(static_cast<std::size_t>(v));
            if (s.empty()) continue;
            facets.push_back(s);
            faces.push_back(Face::from_indices(idx));
        }
        if (facets.empty()) continue;
        std::string text = "vars:";
        for (int v = 0; v < n; ++v) text += " x" + std::to_string(v);
        text += "\n";
        for (int v = 0; v < n; ++v) text += "x" + std::to_string(v) + "\n";
        auto c = close_downward(faces, fixtures::share(fixtures::ideal(text)));
        auto by_size = oracle::close_faces(facets);
        for (long p : {0L, 2L, 3L}) {
            FieldSpec field = p ? FieldSpec::prime(static_cast<std::uint64_t>(p)) : FieldSpec::rationals();
            auto h = reduced_homology_dims(c, field);
            auto rk = [&](std::size_t s) -> std::size_t {
                if (s == 0 || s >= by_size.size()) return 0;
                auto d = oracle::boundary(by_size, s);
                return p ? oracle::rank_p(d, p) : oracle::rank_q(d);
            };
            for (std::size_t s = 0; s < by_size.size(); ++s)
                CHECK(h.at(static_cast<int>(s) - 1) == by_size[s].size() - rk(s) - rk(s + 1));
        }
    }
}

#include <doctest.h>

#include <algorithm>

#include "resolve/complex.hpp"
#include "resolve/corpus.hpp"
#include "resolve/errors.hpp"
#include "resolve/lattice.hpp"
#include "support.hpp"

using namespace resolve;
using fixtures::mono;

TEST_CASE("face basics") {
    Face f{0, 2, 5};
    CHECK(f.order() == 3);
    CHECK(f.indices() == std::vector<std::size_t>{0, 2, 5});
    CHECK(f.contains(2));
    CHECK(f.without(2) == Face{0, 5});
    CHECK(Face{0}.with(3) == Face{0, 3});
    CHECK(Face{0, 2}.is_subset_of(f));
    CHECK_THROWS_AS(Face::from_indices(std::vector<std::size_t>{64}), DomainError);
}

TEST_CASE("canonical face order is size then lex on index lists") {
    std::vector<Face> faces{Face{1, 2}, Face{0, 2}, Face{2}, Face{}, Face{0, 1, 2}, Face{0, 1}, Face{0}};
    std::sort(faces.begin(), faces.end(), canonical_less);
    std::vector<Face> want{Face{}, Face{0}, Face{2}, Face{0, 1}, Face{0, 2}, Face{1, 2}, Face{0, 1, 2}};
    CHECK(faces == want);
    CHECK(canonical_less(Face{0, 3}, Face{1, 2}));
}

TEST_CASE("orientation sign") {
    Face f{1, 3, 4};
    CHECK(orientation_sign(f, Face{3, 4}) == 1);
    CHECK(orientation_sign(f, Face{1, 4}) == -1);
    CHECK(orientation_sign(f, Face{1, 3}) == 1);
    CHECK(orientation_sign(f, Face{1}) == 0);
    CHECK(orientation_sign(f, Face{0, 3}) == 0);
}

TEST_CASE("multidegrees of faces") {
    auto i = fixtures::example_33();
    CHECK(mdeg(Face{}, i).is_one());
    CHECK(mdeg(Face{0, 1}, i) == mono(i, "a^2*b"));
    CHECK(mdeg(Face{0, 2}, i) == mono(i, "a^2*b^3"));
    CHECK(mdeg(Face{0, 1, 2}, i) == mono(i, "a^2*b^3"));
}

TEST_CASE("construction validates closure and indices") {
    auto i = fixtures::share(fixtures::linear_abc());
    CHECK_THROWS_AS(SimplicialComplex::from_faces(i, {Face{}, Face{0, 1}}), DomainError);
    CHECK_THROWS_AS(SimplicialComplex::from_faces(i, {Face{}, Face{3}}), DomainError);
    auto c = SimplicialComplex::from_faces(i, {Face{1}, Face{0}, Face{}, Face{0}});
    CHECK(c.size() == 3);
    CHECK(c.contains(Face{1}));
    CHECK_FALSE(c.contains(Face{2}));
    CHECK(c.f_vector() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("full simplex and the generator cap") {
    auto i = fixtures::example_32();
    auto full = full_simplex(i);
    CHECK(full.f_vector() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(full.max_order() == 3);
    CHECK_THROWS_AS(full_simplex(i, 2), ResourceError);
    try {
        full_simplex(i, 2);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("--max-gens") != std::string::npos);
    }
}

TEST_CASE("restrictions") {
    auto i = fixtures::example_33();
    auto full = full_simplex(i);
    auto le = restrict_leq(full, mono(i, "a^2*b^3"));
    CHECK(le.size() == 8);
    auto lt = restrict_lt(full, mono(i, "a^2*b^3"));
    CHECK(lt.f_vector() == std::vector<std::size_t>{1, 3, 2});
    auto tiny = restrict_leq(full, mono(i, "a*b"));
    CHECK(tiny.f_vector() == std::vector<std::size_t>{1, 1});
    auto none = restrict_lt(full, Monomial(2));
    CHECK(none.size() == 0);
    CHECK(none.max_order() == -1);
}

TEST_CASE("closure and intersection") {
    auto i = fixtures::share(fixtures::linear_abc());
    std::vector<Face> gamma{Face{0, 1}, Face{1, 2}};
    CHECK_FALSE(is_closed(gamma));
    auto c = close_downward(gamma, i);
    CHECK(c.f_vector() == std::vector<std::size_t>{1, 3, 2});
    CHECK(is_closed(c.faces()));
    auto d = close_downward(std::vector<Face>{Face{0, 2}}, i);
    auto both = intersect(c, d);
    CHECK(both.f_vector() == std::vector<std::size_t>{1, 2});
    auto other = fixtures::share(fixtures::example_53());
    CHECK_THROWS_AS(intersect(c, close_downward(std::vector<Face>{Face{0}}, other)), DimensionError);
}

TEST_CASE("face files") {
    auto faces = parse_face_set("# gamma\n()\n0, 1\n\n1,2\n");
    CHECK(faces.size() == 3);
    CHECK(faces[0] == Face{});
    CHECK(faces[1] == Face{0, 1});
    CHECK_THROWS_AS(parse_face_set("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_face_set("0,\n"), ParseError);
    CHECK_THROWS_AS(parse_face_set("x\n"), ParseError);
    CHECK_THROWS_AS(parse_face_set("70\n"), ParseError);
    CHECK(format_face_set(faces) == "()\n0,1\n1,2\n");
    CHECK(parse_face_set(format_face_set(faces)) == faces);
    CHECK_THROWS_AS(read_face_file("/nonexistent/faces.txt"), ParseError);
    auto i = fixtures::example_33();
    CHECK(format_face(Face{0, 2}, i) == "{a^2,b^3}");
}

TEST_CASE("lcm lattice") {
    auto i = fixtures::example_53();
    auto lat = lcm_lattice(i);
    CHECK(lat.size() == 5);
    CHECK(lat.points.front().is_one());
    CHECK(lat.points.back() == mono(i, "a*b*c"));
    CHECK(nonempty_lattice_points(i).size() == 4);
    CHECK(lat.contains(mono(i, "a*c")));
    CHECK_FALSE(lat.contains(mono(i, "a")));
}

TEST_CASE("lattice points follow their divisors on a random corpus") {
    for (const auto& ideal : random_corpus(3, 60)) {
        auto lat = lcm_lattice(ideal);
        for (std::size_t x = 0; x < lat.size(); ++x)
            for (std::size_t y = x + 1; y < lat.size(); ++y) CHECK_FALSE(divides(lat.points[y], lat.points[x]));
        std::vector<Monomial> brute;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << ideal.size()); ++m) brute.push_back(mdeg(Face(m), ideal));
        std::sort(brute.begin(), brute.end());
        brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
        CHECK(brute.size() == lat.size());
    }
}

#include "resolve/selftest.hpp"

#include <functional>
#include <sstream>

#include "resolve/betti.hpp"
#include "resolve/corpus.hpp"
#include "resolve/lyubeznik.hpp"
#include "resolve/resolution.hpp"
#include "resolve/scarf.hpp"

namespace resolve {

namespace {

MonomialIdeal abc_ideal(std::initializer_list<const char*> gens) {
    VarTable vars({"a", "b", "c"});
    std::vector<Monomial> raw;
    for (const char* g : gens) raw.push_back(parse_monomial(g, vars));
    return minimalize_generators(vars, raw);
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
    try {
        std::string failure = body();
        return {std::move(name), failure.empty(), failure};
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

std::string ranks_text(const std::vector<std::size_t>& r) {
    std::string s = "(";
    for (std::size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
    return s + ")";
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed, std::size_t random_count) {
    std::vector<CheckResult> results;
    const auto koszul = abc_ideal({"a", "b^2", "c^3"});
    const auto standard = abc_ideal({"a^2", "a*b", "b^3"});
    const auto triangle = abc_ideal({"a*b", "a*c", "b*c"});
    const FieldSpec rat = FieldSpec::rationals();
    const FieldSpec gf2 = FieldSpec::prime(2);

    results.push_back(check("taylor ranks and minimality", [&]() -> std::string {
        auto t1 = taylor(koszul);
        auto t2 = taylor(standard);
        if (t1.ranks() != std::vector<std::size_t>{1, 3, 3, 1}) return "koszul ranks " + ranks_text(t1.ranks());
        if (!is_minimal(t1).minimal) return "koszul Taylor complex reported non-minimal";
        if (is_minimal(t2).minimal) return "Taylor complex of (a^2,ab,b^3) reported minimal";
        return "";
    }));

    results.push_back(check("restriction criterion on the two-edge path", [&]() -> std::string {
        auto gamma_on = [](const MonomialIdeal& ideal) {
            std::vector<Face> facets{Face{0, 1}, Face{1, 2}};
            return close_downward(facets, std::make_shared<const MonomialIdeal>(ideal));
        };
        if (!supports_resolution(gamma_on(standard)).supported) return "path on (a^2,ab,b^3) rejected";
        auto v = supports_resolution(gamma_on(abc_ideal({"a", "b", "c"})));
        if (v.supported || *v.witness != Monomial{1, 0, 1}) return "path on (a,b,c) not refuted at ac";
        return "";
    }));

    results.push_back(check("scarf examples", [&]() -> std::string {
        if (!is_scarf(standard).supported) return "(a^2,ab,b^3) should be Scarf";
        auto v = is_scarf(triangle);
        if (v.supported || *v.witness != Monomial{1, 1, 1} || v.degree != 0) return "(ab,ac,bc) witness wrong";
        return "";
    }));

    results.push_back(check("lyubeznik census", [&]() -> std::string {
        auto c1 = all_lyubeznik_complexes(triangle);
        if (c1.size() != 3) return "(ab,ac,bc) has " + std::to_string(c1.size()) + " classes";
        for (const auto& c : c1)
            if (c.orders.size() != 2) return "(ab,ac,bc) class with " + std::to_string(c.orders.size()) + " orders";
        auto c2 = all_lyubeznik_complexes(standard);
        if (c2.size() != 2) return "(a^2,ab,b^3) has " + std::to_string(c2.size()) + " classes";
        return "";
    }));

    results.push_back(check("betti totals", [&]() -> std::string {
        if (betti_numbers(koszul).totals() != std::vector<std::size_t>{1, 3, 3, 1}) return "koszul totals";
        if (betti_numbers(standard).totals() != std::vector<std::size_t>{1, 3, 2}) return "(a^2,ab,b^3) totals";
        if (betti_numbers(triangle).totals() != std::vector<std::size_t>{1, 3, 2}) return "(ab,ac,bc) totals";
        calibrate_betti_index_shift(rat);
        return "";
    }));

    auto corpus = random_corpus(seed, random_count);
    results.push_back(check("random corpus properties (seed " + std::to_string(seed) + ")", [&]() -> std::string {
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            const auto& ideal = corpus[k];
            std::string where = "ideal #" + std::to_string(k) + " " + serialize_ideal(ideal);
            if (!verify_intersection_theorem(ideal).holds) return "intersection theorem fails for " + where;
            for (const auto& cls : all_lyubeznik_complexes(ideal)) {
                auto v = lyubeznik_supports(ideal, cls.orders.front(), rat);
                if (!v.support.supported || !v.cone_certificate) return "Lyubeznik complex not a resolution for " + where;
            }
            for (const FieldSpec& f : {rat, gf2})
                if (!betti_numbers(ideal, f).same_entries(betti_via_homology(ideal, f)))
                    return "Betti paths disagree over " + f.to_string() + " for " + where;
            if (!scarf_minimality_certificate(ideal) || !scarf_betti_certificate(ideal))
                return "Scarf certificate fails for " + where;
            if (ideal.size() <= 5 && rank_table(mapping_cone_taylor(ideal)) != rank_table(taylor(ideal)))
                return "mapping cone ranks differ for " + where;
        }
        return "";
    }));
    return results;
}

}  // namespace resolve

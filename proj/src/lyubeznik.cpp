#include "resolve/lyubeznik.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "resolve/errors.hpp"
#include "resolve/scarf.hpp"

namespace resolve {

namespace {

/// Multidegree and dividing-generator mask of every face of the full simplex.
struct FaceTable {
    std::vector<Monomial> mdeg;
    std::vector<std::uint64_t> divisors;

    FaceTable(const MonomialIdeal& ideal, std::size_t max_gens) {
        require_gen_cap(ideal, max_gens);
        const std::size_t r = ideal.size();
        const std::uint64_t count = std::uint64_t{1} << r;
        mdeg.resize(count);
        divisors.resize(count);
        mdeg[0] = Monomial(ideal.nvars());
        for (std::uint64_t m = 1; m < count; ++m)
            mdeg[m] = lcm(mdeg[m & (m - 1)], ideal.generator(static_cast<std::size_t>(std::countr_zero(m))));
        for (std::uint64_t m = 0; m < count; ++m) {
            std::uint64_t d = 0;
            for (std::size_t g = 0; g < r; ++g)
                if (divides(ideal.generator(g), mdeg[m])) d |= std::uint64_t{1} << g;
            divisors[m] = d;
        }
    }
};

std::size_t first_in_order(std::uint64_t candidates, const TotalOrder& order) {
    std::size_t best = order.size();
    std::size_t best_rank = order.size();
    for (std::uint64_t m = candidates; m != 0; m &= m - 1) {
        auto g = static_cast<std::size_t>(std::countr_zero(m));
        if (order.rank_of(g) < best_rank) {
            best_rank = order.rank_of(g);
            best = g;
        }
    }
    return best;
}

/// Rooted faces as masks, via the hereditary recursion: F is rooted iff
/// min(F) lies in F and every facet of F is rooted.
std::vector<std::uint64_t> rooted_masks(const FaceTable& table, const TotalOrder& order) {
    const std::size_t count = table.mdeg.size();
    std::vector<char> rooted(count, 0);
    rooted[0] = 1;
    std::vector<std::uint64_t> out{0};
    for (std::uint64_t m = 1; m < count; ++m) {
        std::size_t root = first_in_order(table.divisors[m], order);
        if (!((m >> root) & 1u)) continue;
        bool ok = true;
        for (std::uint64_t bits = m; bits != 0 && ok; bits &= bits - 1) ok = rooted[m & ~(bits & -bits)];
        if (ok) {
            rooted[m] = 1;
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) { return canonical_less(Face(a), Face(b)); });
    return out;
}

SimplicialComplex complex_from_masks(std::shared_ptr<const MonomialIdeal> ideal, const FaceTable& table,
                                     const std::vector<std::uint64_t>& masks) {
    std::vector<Face> faces;
    std::vector<Monomial> mdegs;
    faces.reserve(masks.size());
    mdegs.reserve(masks.size());
    for (std::uint64_t m : masks) {
        faces.emplace_back(m);
        mdegs.push_back(table.mdeg[m]);
    }
    return SimplicialComplex::trusted(std::move(ideal), std::move(faces), std::move(mdegs));
}

std::size_t checked_factorial(std::size_t r, std::size_t max_orders) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= r; ++k) {
        f *= k;
        if (f > max_orders)
            throw ResourceError(std::to_string(r) + "! total orders exceed the cap --max-orders=" +
                                std::to_string(max_orders));
    }
    return f;
}

}  // namespace

TotalOrder::TotalOrder(std::vector<std::size_t> perm) : perm_(std::move(perm)), rank_(perm_.size(), perm_.size()) {
    for (std::size_t pos = 0; pos < perm_.size(); ++pos) {
        std::size_t g = perm_[pos];
        if (g >= perm_.size() || rank_[g] != perm_.size())
            throw DomainError("order is not a permutation of the generator indices");
        rank_[g] = pos;
    }
}

TotalOrder TotalOrder::identity(std::size_t r) {
    std::vector<std::size_t> p(r);
    std::iota(p.begin(), p.end(), 0);
    return TotalOrder(std::move(p));
}

std::size_t min_label(const Monomial& mu, const TotalOrder& order, const MonomialIdeal& ideal) {
    if (order.size() != ideal.size()) throw DimensionError("order does not match the number of generators");
    for (std::size_t g : order.perm())
        if (divides(ideal.generator(g), mu)) return g;
    throw DomainError("no generator divides the multidegree (it is not in the ideal)");
}

bool is_rooted(Face face, const TotalOrder& order, const MonomialIdeal& ideal) {
    for (std::uint64_t sub = face.mask(); sub != 0; sub = (sub - 1) & face.mask()) {
        Face g(sub);
        if (!g.contains(min_label(mdeg(g, ideal), order, ideal))) return false;
    }
    return true;
}

SimplicialComplex lyubeznik_complex(const MonomialIdeal& ideal, const TotalOrder& order, std::size_t max_gens) {
    if (order.size() != ideal.size()) throw DimensionError("order does not match the number of generators");
    FaceTable table(ideal, max_gens);
    return complex_from_masks(std::make_shared<const MonomialIdeal>(ideal), table, rooted_masks(table, order));
}

std::vector<LyubeznikClass> all_lyubeznik_complexes(const MonomialIdeal& ideal, std::size_t max_orders,
                                                    std::size_t max_gens) {
    checked_factorial(ideal.size(), max_orders);
    FaceTable table(ideal, max_gens);
    auto ptr = std::make_shared<const MonomialIdeal>(ideal);

    std::vector<LyubeznikClass> classes;
    std::map<std::vector<std::uint64_t>, std::size_t> by_faces;
    std::vector<std::size_t> perm(ideal.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TotalOrder order(perm);
        auto masks = rooted_masks(table, order);
        auto [it, inserted] = by_faces.try_emplace(masks, classes.size());
        if (inserted) classes.push_back(LyubeznikClass{complex_from_masks(ptr, table, masks), {}});
        classes[it->second].orders.push_back(std::move(order));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return classes;
}

bool is_cone_over(const SimplicialComplex& complex, std::size_t apex) {
    for (Face f : complex.faces())
        if (!complex.contains(f.with(apex))) return false;
    return true;
}

LyubeznikVerdict lyubeznik_supports(const MonomialIdeal& ideal, const TotalOrder& order, const FieldSpec& field,
                                    std::size_t max_gens) {
    auto lambda = lyubeznik_complex(ideal, order, max_gens);
    LyubeznikVerdict verdict;
    verdict.support = supports_resolution(lambda, field);
    for (const Monomial& mu : nonempty_lattice_points(ideal, max_gens)) {
        if (!is_cone_over(restrict_leq(lambda, mu), min_label(mu, order, ideal))) {
            verdict.cone_certificate = false;
            verdict.cone_failure = mu;
            break;
        }
    }
    return verdict;
}

SimplicialComplex lyubeznik_intersection(const MonomialIdeal& ideal, std::size_t max_orders, std::size_t max_gens) {
    auto classes = all_lyubeznik_complexes(ideal, max_orders, max_gens);
    SimplicialComplex acc = classes.front().complex;
    for (std::size_t k = 1; k < classes.size(); ++k) acc = intersect(acc, classes[k].complex);
    return acc;
}

IntersectionReport verify_intersection_theorem(const MonomialIdeal& ideal, std::size_t max_orders,
                                               std::size_t max_gens) {
    auto meet = lyubeznik_intersection(ideal, max_orders, max_gens);
    auto scarf = scarf_complex(ideal, max_gens).complex;
    IntersectionReport report{true, meet, scarf, {}, {}};
    for (Face f : meet.faces())
        if (!scarf.contains(f)) report.only_in_intersection.push_back(f);
    for (Face f : scarf.faces())
        if (!meet.contains(f)) report.only_in_scarf.push_back(f);
    report.holds = report.only_in_intersection.empty() && report.only_in_scarf.empty();
    return report;
}

}  // namespace resolve

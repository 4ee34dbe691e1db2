#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "resolve/complex.hpp"
#include "resolve/linalg.hpp"
#include "resolve/resolution.hpp"

namespace resolve {

/// Default cap on the number of total orders enumerated (8! = 40320).
inline constexpr std::size_t kDefaultMaxOrders = 40320;

/// Total order on generator indices; perm[0] is the smallest element.
class TotalOrder {
public:
    /// Validates that perm is a permutation of 0..r-1.
    explicit TotalOrder(std::vector<std::size_t> perm);
    static TotalOrder identity(std::size_t r);

    const std::vector<std::size_t>& perm() const noexcept { return perm_; }
    std::size_t size() const noexcept { return perm_.size(); }
    /// Position of generator g in the order.
    std::size_t rank_of(std::size_t g) const { return rank_.at(g); }

    bool operator==(const TotalOrder& o) const { return perm_ == o.perm_; }

private:
    std::vector<std::size_t> perm_;
    std::vector<std::size_t> rank_;
};

/// The order-first generator dividing mu; DomainError when mu is not in I.
std::size_t min_label(const Monomial& mu, const TotalOrder& order, const MonomialIdeal& ideal);

/// Every nonempty subface G of F (F included) contains min_label(mdeg(G)).
bool is_rooted(Face face, const TotalOrder& order, const MonomialIdeal& ideal);

/// Complex of rooted faces.
SimplicialComplex lyubeznik_complex(const MonomialIdeal& ideal, const TotalOrder& order,
                                    std::size_t max_gens = kDefaultMaxGens);

struct LyubeznikClass {
    SimplicialComplex complex;
    std::vector<TotalOrder> orders;  // every order producing this complex, in enumeration order
};

/// All r! orders grouped by resulting complex, classes listed by first
/// appearance in lexicographic permutation order.
std::vector<LyubeznikClass> all_lyubeznik_complexes(const MonomialIdeal& ideal,
                                                    std::size_t max_orders = kDefaultMaxOrders,
                                                    std::size_t max_gens = kDefaultMaxGens);

struct LyubeznikVerdict {
    SupportVerdict support;
    /// Every restriction to a point mu of the lcm lattice is a cone with apex
    /// min_label(mu).
    bool cone_certificate = true;
    std::optional<Monomial> cone_failure;
};

LyubeznikVerdict lyubeznik_supports(const MonomialIdeal& ideal, const TotalOrder& order,
                                    const FieldSpec& field = FieldSpec::rationals(),
                                    std::size_t max_gens = kDefaultMaxGens);

/// Cone check for one restriction: F in restriction implies F u {apex} in it.
bool is_cone_over(const SimplicialComplex& complex, std::size_t apex);

/// Intersection over every order's Lyubeznik complex.
SimplicialComplex lyubeznik_intersection(const MonomialIdeal& ideal, std::size_t max_orders = kDefaultMaxOrders,
                                         std::size_t max_gens = kDefaultMaxGens);

struct IntersectionReport {
    bool holds = true;
    SimplicialComplex intersection;
    SimplicialComplex scarf;
    std::vector<Face> only_in_intersection;
    std::vector<Face> only_in_scarf;
};

/// Compares the Lyubeznik intersection with the Scarf complex face for face.
IntersectionReport verify_intersection_theorem(const MonomialIdeal& ideal, std::size_t max_orders = kDefaultMaxOrders,
                                               std::size_t max_gens = kDefaultMaxGens);

}  // namespace resolve

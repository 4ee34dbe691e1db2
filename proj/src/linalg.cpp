#include "resolve/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <numeric>

#include "resolve/errors.hpp"

namespace resolve {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Row-echelon engines. Each engine reduces rows one at a time against the
// pivots found so far (keyed by leading column) and counts surviving rows.

struct Overflow {};

template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

struct CheckedInt {
    using value_type = std::int64_t;
    static value_type mul(value_type a, value_type b) {
        value_type out;
        if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
    static value_type sub(value_type a, value_type b) {
        value_type out;
        if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
    static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
    static value_type div(value_type a, value_type b) { return a / b; }
    static bool is_zero(value_type a) { return a == 0; }
    static bool negative(value_type a) { return a < 0; }
    static value_type neg(value_type a) {
        if (a == std::numeric_limits<value_type>::min()) throw Overflow{};
        return -a;
    }
};

struct BigInt {
    using value_type = mpz_class;
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type sub(const value_type& a, const value_type& b) { return a - b; }
    static value_type gcd(const value_type& a, const value_type& b) {
        value_type g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static value_type div(const value_type& a, const value_type& b) { return a / b; }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    static bool negative(const value_type& a) { return sgn(a) < 0; }
    static value_type neg(const value_type& a) { return -a; }
};

/// cur <- x*cur - y*piv, both rows sorted by column.
template <typename Ops>
SparseRow<typename Ops::value_type> combine(const SparseRow<typename Ops::value_type>& cur,
                                            const typename Ops::value_type& x,
                                            const SparseRow<typename Ops::value_type>& piv,
                                            const typename Ops::value_type& y) {
    SparseRow<typename Ops::value_type> out;
    out.reserve(cur.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < cur.size() || j < piv.size()) {
        if (j == piv.size() || (i < cur.size() && cur[i].first < piv[j].first)) {
            out.emplace_back(cur[i].first, Ops::mul(x, cur[i].second));
            ++i;
        } else if (i == cur.size() || piv[j].first < cur[i].first) {
            out.emplace_back(piv[j].first, Ops::neg(Ops::mul(y, piv[j].second)));
            ++j;
        } else {
            auto v = Ops::sub(Ops::mul(x, cur[i].second), Ops::mul(y, piv[j].second));
            if (!Ops::is_zero(v)) out.emplace_back(cur[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <typename Ops>
void make_primitive(SparseRow<typename Ops::value_type>& row) {
    typename Ops::value_type g = 0;
    for (auto& [c, v] : row) g = Ops::gcd(g, v);
    if (Ops::negative(row.front().second)) g = Ops::neg(g);
    if (g != 1)
        for (auto& [c, v] : row) v = Ops::div(v, g);
}

template <typename Ops>
std::size_t fraction_free_rank(const ExactMatrix& a) {
    using T = typename Ops::value_type;
    std::vector<SparseRow<T>> pivots;
    std::vector<std::int64_t> pivot_of(a.cols(), -1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseRow<T> cur;
        for (auto [c, v] : a.row(r)) cur.emplace_back(c, T(v));
        while (!cur.empty()) {
            std::uint32_t lead = cur.front().first;
            if (pivot_of[lead] < 0) {
                make_primitive<Ops>(cur);
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(cur));
                break;
            }
            const auto& piv = pivots[static_cast<std::size_t>(pivot_of[lead])];
            T g = Ops::gcd(cur.front().second, piv.front().second);
            T x = Ops::div(piv.front().second, g);
            T y = Ops::div(cur.front().second, g);
            cur = combine<Ops>(cur, x, piv, y);
            if (!cur.empty()) make_primitive<Ops>(cur);
        }
    }
    return pivots.size();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

std::size_t modular_rank(const ExactMatrix& a, std::uint64_t p) {
    using Row = SparseRow<std::uint64_t>;
    std::vector<Row> pivots;
    std::vector<std::int64_t> pivot_of(a.cols(), -1);
    auto reduce = [p](std::int64_t v) {
        auto m = static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(((v % m) + m) % m);
    };
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Row cur;
        for (auto [c, v] : a.row(r))
            if (auto m = reduce(v)) cur.emplace_back(c, m);
        while (!cur.empty()) {
            std::uint32_t lead = cur.front().first;
            if (pivot_of[lead] < 0) {
                std::uint64_t inv = pow_mod(cur.front().second, p - 2, p);
                for (auto& [c, v] : cur) v = v * inv % p;
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(cur));
                break;
            }
            const Row& piv = pivots[static_cast<std::size_t>(pivot_of[lead])];
            std::uint64_t f = cur.front().second;  // pivot rows are monic
            Row out;
            out.reserve(cur.size() + piv.size());
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < piv.size()) {
                if (j == piv.size() || (i < cur.size() && cur[i].first < piv[j].first)) {
                    out.push_back(cur[i++]);
                } else if (i == cur.size() || piv[j].first < cur[i].first) {
                    out.emplace_back(piv[j].first, (p - f * piv[j].second % p) % p);
                    ++j;
                } else {
                    std::uint64_t v = (cur[i].second + p - f * piv[j].second % p) % p;
                    if (v) out.emplace_back(cur[i].first, v);
                    ++i;
                    ++j;
                }
            }
            cur = std::move(out);
        }
    }
    return pivots.size();
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw DomainError("field characteristic must be below 2^31");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rat") return rationals();
    if (text.substr(0, 3) == "gf:") {
        std::string_view digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size()) {
            try {
                return prime(p);
            } catch (const DomainError& e) {
                throw ParseError(std::string("--field: ") + e.what());
            }
        }
    }
    throw ParseError("--field expects 'rat' or 'gf:<prime>', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const { return is_rational() ? "rat" : "gf:" + std::to_string(p_); }

void ExactMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
    if (row >= rows_.size() || col >= cols_) throw DimensionError("matrix index out of range");
    if (value == 0) return;
    auto& r = rows_[row];
    auto c = static_cast<std::uint32_t>(col);
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const Entry& e, std::uint32_t k) { return e.first < k; });
    if (it != r.end() && it->first == c) {
        it->second += value;
        if (it->second == 0) r.erase(it);
    } else {
        r.insert(it, {c, value});
    }
}

std::int64_t ExactMatrix::at(std::size_t row, std::size_t col) const {
    const auto& r = rows_.at(row);
    auto c = static_cast<std::uint32_t>(col);
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const Entry& e, std::uint32_t k) { return e.first < k; });
    return it != r.end() && it->first == c ? it->second : 0;
}

std::size_t ExactMatrix::nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
    return m;
}

std::size_t rank(const ExactMatrix& a, const FieldSpec& field) {
    if (!field.is_rational()) return modular_rank(a, field.characteristic());
    try {
        return fraction_free_rank<CheckedInt>(a);
    } catch (const Overflow&) {
        return fraction_free_rank<BigInt>(a);
    }
}

std::size_t ReducedHomology::at(int degree) const {
    auto idx = static_cast<std::size_t>(degree + 1);
    return degree >= -1 && idx < dims.size() ? dims[idx] : 0;
}

bool ReducedHomology::is_zero() const noexcept {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

std::optional<int> ReducedHomology::first_nonzero_degree() const noexcept {
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] != 0) return static_cast<int>(i) - 1;
    return std::nullopt;
}

namespace {

/// [begin, end) of the faces of each order in a canonically sorted face list.
std::vector<std::pair<std::size_t, std::size_t>> order_blocks(std::span<const Face> faces) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        std::size_t s = faces[i].order();
        while (blocks.size() <= s) blocks.emplace_back(i, i);
        blocks[s].second = i + 1;
    }
    return blocks;
}

ExactMatrix boundary_from_blocks(std::span<const Face> faces,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& blocks, std::size_t order) {
    auto [rb, re] = blocks.at(order);
    auto [cb, ce] = blocks.at(order - 1);
    ExactMatrix m(re - rb, ce - cb);
    auto cols = faces.subspan(cb, ce - cb);
    for (std::size_t r = rb; r < re; ++r) {
        Face f = faces[r];
        for (std::uint64_t bits = f.mask(); bits != 0; bits &= bits - 1) {
            Face g(f.mask() & ~(bits & -bits));
            auto it = std::lower_bound(cols.begin(), cols.end(), g, canonical_less);
            if (it == cols.end() || *it != g) throw DomainError("face set is not closed under taking subsets");
            m.add(r - rb, static_cast<std::size_t>(it - cols.begin()), orientation_sign(f, g));
        }
    }
    return m;
}

}  // namespace

ExactMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t order) {
    if (order == 0) throw DomainError("boundary matrix needs order >= 1");
    auto blocks = order_blocks(complex.faces());
    if (order >= blocks.size()) {
        std::size_t below = order - 1 < blocks.size() ? blocks[order - 1].second - blocks[order - 1].first : 0;
        return ExactMatrix(0, below);
    }
    return boundary_from_blocks(complex.faces(), blocks, order);
}

ReducedHomology reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field) {
    auto faces = complex.faces();
    auto blocks = order_blocks(faces);
    const std::size_t top = blocks.size();  // orders 0 .. top-1
    std::vector<std::size_t> ranks(top + 1, 0);  // ranks[s] = rank of C_s -> C_{s-1}
    for (std::size_t s = 1; s < top; ++s) ranks[s] = rank(boundary_from_blocks(faces, blocks, s), field);

    ReducedHomology h;
    h.dims.resize(top);
    for (std::size_t s = 0; s < top; ++s) {
        std::size_t n = blocks[s].second - blocks[s].first;
        h.dims[s] = n - ranks[s] - ranks[s + 1];
    }
    return h;
}

bool is_acyclic(const SimplicialComplex& complex, const FieldSpec& field) {
    return reduced_homology_dims(complex, field).is_zero();
}

}  // namespace resolve

#include "resolve/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "resolve/errors.hpp"

namespace resolve {

namespace {

void sort_entries(std::vector<DiffEntry>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const DiffEntry& a, const DiffEntry& b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
}

/// Reduce an integral coefficient into [0, p).
Coefficient reduce_mod(const Coefficient& c, std::uint64_t p) {
    mpz_class num = c.get_num();
    mpz_class den = c.get_den();
    mpz_class mod(static_cast<unsigned long>(p));
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw DomainError("coefficient denominator vanishes in the field");
    mpz_class r = num * inv % mod;
    if (r < 0) r += mod;
    return Coefficient(r);
}

bool is_zero_in(const Coefficient& c, const FieldSpec& field) {
    if (field.is_rational()) return sgn(c) == 0;
    return sgn(reduce_mod(c, field.characteristic())) == 0;
}

std::vector<Monomial> symbol_mdegs_to_ideal(const std::vector<Monomial>& gens) {
    std::vector<Monomial> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), canonical_before);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < sorted.size() && !redundant; ++j) redundant = j != i && divides(sorted[j], sorted[i]);
        if (!redundant) out.push_back(sorted[i]);
    }
    return out;
}

/// Builds the complex associated to a canonical face list with multidegrees.
FreeComplex associated_complex(std::span<const Face> faces, std::span<const Monomial> mdegs,
                               std::vector<Monomial> ideal_gens, std::size_t nvars, const FieldSpec& field) {
    std::vector<std::vector<BasisSymbol>> modules;
    std::vector<std::vector<std::pair<Face, std::size_t>>> lookup;  // per order, canonical
    for (std::size_t k = 0; k < faces.size(); ++k) {
        std::size_t s = faces[k].order();
        while (modules.size() <= s) {
            modules.emplace_back();
            lookup.emplace_back();
        }
        lookup[s].emplace_back(faces[k], modules[s].size());
        modules[s].push_back(BasisSymbol{faces[k], mdegs[k]});
    }
    if (modules.empty() || modules[0].size() != 1)
        throw DomainError("complex must contain the empty face");
    (void)nvars;

    std::vector<std::vector<DiffEntry>> diffs(modules.size() > 0 ? modules.size() - 1 : 0);
    for (std::size_t s = 1; s < modules.size(); ++s) {
        auto& out = diffs[s - 1];
        const auto& targets = lookup[s - 1];
        for (std::size_t c = 0; c < modules[s].size(); ++c) {
            const BasisSymbol& src = modules[s][c];
            Face f = *src.face;
            for (std::uint64_t bits = f.mask(); bits != 0; bits &= bits - 1) {
                Face g(f.mask() & ~(bits & -bits));
                auto it = std::lower_bound(targets.begin(), targets.end(), g,
                                           [](const auto& e, Face key) { return canonical_less(e.first, key); });
                if (it == targets.end() || it->first != g) throw DomainError("face set is not closed under taking subsets");
                const BasisSymbol& dst = modules[s - 1][it->second];
                out.push_back(DiffEntry{it->second, c, Coefficient(orientation_sign(f, g)), quotient(src.mdeg, dst.mdeg)});
            }
        }
    }
    return FreeComplex(std::move(modules), std::move(diffs), std::move(ideal_gens), field);
}

// Dense exact solve over Q: returns x with A x = b, or nullopt.
std::optional<std::vector<Coefficient>> solve_rational(std::vector<std::vector<Coefficient>> a,
                                                       std::vector<Coefficient> b, std::size_t ncols) {
    const std::size_t nrows = a.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && sgn(a[sel][col]) == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[row]);
        std::swap(b[sel], b[row]);
        Coefficient inv = 1 / a[row][col];
        for (std::size_t k = col; k < ncols; ++k) a[row][k] *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || sgn(a[r][col]) == 0) continue;
            Coefficient f = a[r][col];
            for (std::size_t k = col; k < ncols; ++k) a[r][k] -= f * a[row][k];
            b[r] -= f * b[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r)
        if (sgn(b[r]) != 0) return std::nullopt;
    std::vector<Coefficient> x(ncols, 0);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = b[k];
    return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// FreeComplex

FreeComplex::FreeComplex(std::vector<std::vector<BasisSymbol>> modules, std::vector<std::vector<DiffEntry>> diffs,
                         std::vector<Monomial> ideal_generators, FieldSpec field)
    : modules_(std::move(modules)), diffs_(std::move(diffs)), ideal_gens_(std::move(ideal_generators)), field_(field) {
    if (modules_.empty()) throw DomainError("free complex needs F_0");
    if (diffs_.size() + 1 != modules_.size())
        throw DimensionError("free complex needs one differential per consecutive module pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        for (const DiffEntry& e : diffs_[i])
            if (e.row >= modules_[i].size() || e.col >= modules_[i + 1].size())
                throw DimensionError("differential entry out of range in map " + std::to_string(i));
        sort_entries(diffs_[i]);
    }
}

std::vector<std::size_t> FreeComplex::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& m : modules_) out.push_back(m.size());
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

const DiffEntry* FreeComplex::entry(std::size_t i, std::size_t row, std::size_t col) const {
    const auto& d = diffs_.at(i);
    auto it = std::lower_bound(d.begin(), d.end(), std::pair{col, row}, [](const DiffEntry& e, const auto& key) {
        return std::pair{e.col, e.row} < key;
    });
    return it != d.end() && it->col == col && it->row == row ? &*it : nullptr;
}

std::optional<std::size_t> FreeComplex::find_symbol(std::size_t i, Face face) const {
    const auto& m = modules_.at(i);
    for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k].face == face) return k;
    return std::nullopt;
}

RankTable rank_table(const FreeComplex& complex) {
    RankTable table;
    for (std::size_t i = 0; i < complex.modules().size(); ++i)
        for (const BasisSymbol& s : complex.module(i)) ++table[{i, s.mdeg}];
    return table;
}

// ---------------------------------------------------------------------------
// Constructions

FreeComplex taylor(const MonomialIdeal& ideal, std::size_t max_gens) {
    require_nontrivial(ideal);
    auto delta = full_simplex(ideal, max_gens);
    std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
    return associated_complex(delta.faces(), delta.multidegrees(), std::move(gens), ideal.nvars(),
                              FieldSpec::rationals());
}

FreeComplex taylor_on(const std::vector<Monomial>& generators, std::size_t max_gens) {
    if (generators.empty()) throw DomainError("Taylor complex needs at least one generator");
    const std::size_t r = generators.size();
    if (r > std::min(max_gens, kHardMaxGens))
        throw ResourceError("generating list of size " + std::to_string(r) + " exceeds --max-gens=" +
                            std::to_string(max_gens));
    const std::size_t nvars = generators.front().size();
    for (const Monomial& g : generators)
        if (g.is_one()) throw DomainError("Taylor complex of a unit generator");

    const std::uint64_t count = std::uint64_t{1} << r;
    std::vector<Monomial> by_mask(count);
    by_mask[0] = Monomial(nvars);
    for (std::uint64_t m = 1; m < count; ++m)
        by_mask[m] = lcm(by_mask[m & (m - 1)], generators[static_cast<std::size_t>(std::countr_zero(m))]);
    std::vector<Face> faces;
    for (std::uint64_t m = 0; m < count; ++m) faces.emplace_back(m);
    std::sort(faces.begin(), faces.end(), canonical_less);
    std::vector<Monomial> mdegs;
    for (Face f : faces) mdegs.push_back(by_mask[f.mask()]);
    return associated_complex(faces, mdegs, symbol_mdegs_to_ideal(generators), nvars, FieldSpec::rationals());
}

FreeComplex complex_of(const SimplicialComplex& complex, const FieldSpec& field) {
    const MonomialIdeal& ideal = complex.ideal();
    std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
    return associated_complex(complex.faces(), complex.multidegrees(), std::move(gens), ideal.nvars(), field);
}

FreeComplex mapping_cone_taylor(const MonomialIdeal& ideal, std::size_t max_gens) {
    require_nontrivial(ideal);
    require_gen_cap(ideal, max_gens);
    const std::size_t r = ideal.size();
    const std::size_t nvars = ideal.nvars();
    auto gens = ideal.generators();

    // Resolution of S/(m_0): 0 -> S[m_0] -> S[empty].
    std::vector<std::vector<BasisSymbol>> mods{{BasisSymbol{Face{}, Monomial(nvars)}}, {BasisSymbol{Face{0}, gens[0]}}};
    std::vector<std::vector<DiffEntry>> difs{{DiffEntry{0, 0, Coefficient(1), gens[0]}}};
    FreeComplex current(mods, difs, {gens[0]});

    for (std::size_t t = 1; t < r; ++t) {
        const Monomial& mt = gens[t];
        std::vector<Monomial> colon;
        for (std::size_t i = 0; i < t; ++i) colon.push_back(quotient(lcm(gens[i], mt), mt));
        FreeComplex a = taylor_on(colon, max_gens);
        const FreeComplex& b = current;

        // f[i][k]: image of symbol k of A_i in B_i as (B index, coefficient).
        std::vector<std::vector<std::vector<std::pair<std::size_t, Coefficient>>>> f(a.modules().size());
        f[0] = {{{0, Coefficient(1)}}};
        for (std::size_t i = 1; i < a.modules().size(); ++i) {
            f[i].resize(a.module(i).size());
            if (i >= b.modules().size()) continue;
            const auto& bi = b.module(i);
            const auto& bprev = b.module(i - 1);
            for (std::size_t k = 0; k < a.module(i).size(); ++k) {
                Monomial mu = product(a.module(i)[k].mdeg, mt);
                // Right-hand side: f_{i-1}(alpha(a_k)) over B_{i-1}.
                std::vector<Coefficient> rhs(bprev.size(), 0);
                for (const DiffEntry& e : a.diff(i - 1)) {
                    if (e.col != k) continue;
                    for (const auto& [bidx, c] : f[i - 1][e.row]) rhs[bidx] += e.coef * c;
                }
                std::vector<std::size_t> unknowns;
                for (std::size_t j = 0; j < bi.size(); ++j)
                    if (divides(bi[j].mdeg, mu)) unknowns.push_back(j);
                std::vector<std::size_t> eqs;
                std::vector<std::int64_t> eq_of(bprev.size(), -1);
                for (std::size_t j = 0; j < bprev.size(); ++j)
                    if (divides(bprev[j].mdeg, mu)) {
                        eq_of[j] = static_cast<std::int64_t>(eqs.size());
                        eqs.push_back(j);
                    }
                std::vector<std::vector<Coefficient>> mat(eqs.size(), std::vector<Coefficient>(unknowns.size(), 0));
                std::vector<std::int64_t> unk_of(bi.size(), -1);
                for (std::size_t u = 0; u < unknowns.size(); ++u) unk_of[unknowns[u]] = static_cast<std::int64_t>(u);
                for (const DiffEntry& e : b.diff(i - 1)) {
                    if (unk_of[e.col] < 0) continue;
                    mat[static_cast<std::size_t>(eq_of[e.row])][static_cast<std::size_t>(unk_of[e.col])] = e.coef;
                }
                std::vector<Coefficient> bvec;
                for (std::size_t j = 0; j < bprev.size(); ++j) {
                    if (eq_of[j] >= 0) {
                        bvec.push_back(rhs[j]);
                    } else if (sgn(rhs[j]) != 0) {
                        throw std::logic_error("mapping cone: lift target leaves the strand");
                    }
                }
                auto x = solve_rational(std::move(mat), std::move(bvec), unknowns.size());
                if (!x) throw std::logic_error("mapping cone: comparison map does not lift (B not exact?)");
                for (std::size_t u = 0; u < unknowns.size(); ++u)
                    if (sgn((*x)[u]) != 0) f[i][k].emplace_back(unknowns[u], (*x)[u]);
            }
        }

        // Cone: T_i = B_i (+) A_{i-1}; A symbols become faces F u {t}.
        const std::size_t len = std::max(b.modules().size(), a.modules().size() + 1);
        std::vector<std::vector<BasisSymbol>> tm(len);
        std::vector<std::size_t> a_offset(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (i < b.modules().size()) tm[i] = b.module(i);
            a_offset[i] = tm[i].size();
            if (i >= 1 && i - 1 < a.modules().size())
                for (const BasisSymbol& s : a.module(i - 1))
                    tm[i].push_back(BasisSymbol{s.face->with(t), product(s.mdeg, mt)});
        }
        std::vector<std::vector<DiffEntry>> td(len - 1);
        for (std::size_t i = 0; i + 1 < len; ++i) {
            if (i < b.diffs().size()) td[i] = b.diff(i);
            // Columns of T_{i+1} coming from A_i.
            if (i < a.modules().size()) {
                for (std::size_t k = 0; k < a.module(i).size(); ++k) {
                    std::size_t col = a_offset[i + 1] + k;
                    for (const auto& [bidx, c] : f[i][k])
                        td[i].push_back(DiffEntry{bidx, col, c, quotient(tm[i + 1][col].mdeg, tm[i][bidx].mdeg)});
                    if (i >= 1) {
                        for (const DiffEntry& e : a.diff(i - 1))
                            if (e.col == k) td[i].push_back(DiffEntry{a_offset[i] + e.row, col, -e.coef, e.mono});
                    }
                }
            }
        }

        // Canonical symbol order within each module.
        std::vector<std::vector<std::size_t>> new_index(len);
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<std::size_t> perm(tm[i].size());
            std::iota(perm.begin(), perm.end(), 0);
            std::sort(perm.begin(), perm.end(),
                      [&](std::size_t x, std::size_t y) { return canonical_less(*tm[i][x].face, *tm[i][y].face); });
            new_index[i].resize(perm.size());
            std::vector<BasisSymbol> sorted;
            for (std::size_t p = 0; p < perm.size(); ++p) {
                new_index[i][perm[p]] = p;
                sorted.push_back(tm[i][perm[p]]);
            }
            tm[i] = std::move(sorted);
        }
        for (std::size_t i = 0; i + 1 < len; ++i)
            for (DiffEntry& e : td[i]) {
                e.row = new_index[i][e.row];
                e.col = new_index[i + 1][e.col];
            }
        std::vector<Monomial> tgens(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(t) + 1);
        current = FreeComplex(std::move(tm), std::move(td), symbol_mdegs_to_ideal(tgens));
    }
    return current;
}

// ---------------------------------------------------------------------------
// Criteria

SupportVerdict supports_resolution(const SimplicialComplex& complex, const FieldSpec& field) {
    SupportVerdict verdict;
    verdict.field = field;
    for (const Monomial& mu : nonempty_lattice_points(complex.ideal(), kHardMaxGens)) {
        auto h = reduced_homology_dims(restrict_leq(complex, mu), field);
        if (auto d = h.first_nonzero_degree()) {
            verdict.supported = false;
            verdict.witness = mu;
            verdict.degree = *d;
            verdict.dimension = h.at(*d);
            return verdict;
        }
    }
    return verdict;
}

Strand strand(const FreeComplex& complex, const Monomial& mu) {
    const auto& mods = complex.modules();
    bool in_ideal = std::any_of(complex.ideal_generators().begin(), complex.ideal_generators().end(),
                                [&](const Monomial& g) { return divides(g, mu); });

    // Positions: 0 is (S/I)_mu, i+1 is (F_i)_mu.
    std::vector<std::vector<std::int64_t>> index(mods.size());
    Strand s;
    s.dims.push_back(in_ideal ? 0 : 1);
    for (std::size_t i = 0; i < mods.size(); ++i) {
        index[i].assign(mods[i].size(), -1);
        std::size_t n = 0;
        for (std::size_t k = 0; k < mods[i].size(); ++k)
            if (divides(mods[i][k].mdeg, mu)) index[i][k] = static_cast<std::int64_t>(n++);
        s.dims.push_back(n);
    }

    // Augmentation F_0 -> S/I sends [empty] to 1.
    ExactMatrix aug(s.dims[1], s.dims[0]);
    if (!in_ideal && s.dims[1] == 1) aug.add(0, 0, 1);
    s.maps.push_back(std::move(aug));

    for (std::size_t i = 0; i < complex.diffs().size(); ++i) {
        // Per source symbol, scale the column of coefficients to integers.
        std::map<std::size_t, std::vector<std::pair<std::size_t, Coefficient>>> rows;
        for (const DiffEntry& e : complex.diff(i)) {
            if (index[i + 1][e.col] < 0) continue;
            if (index[i][e.row] < 0) throw DomainError("strand of a non-homogeneous complex");
            rows[static_cast<std::size_t>(index[i + 1][e.col])].emplace_back(static_cast<std::size_t>(index[i][e.row]),
                                                                              e.coef);
        }
        ExactMatrix m(s.dims[i + 2], s.dims[i + 1]);
        for (const auto& [r, entries] : rows) {
            mpz_class scale = 1;
            for (const auto& [c, v] : entries) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
            for (const auto& [c, v] : entries) {
                mpz_class n = v.get_num() * (scale / v.get_den());
                if (!n.fits_slong_p()) throw DomainError("strand coefficient exceeds 64 bits");
                m.add(r, c, n.get_si());
            }
        }
        s.maps.push_back(std::move(m));
    }
    return s;
}

std::vector<std::size_t> Strand::homology(const FieldSpec& field) const {
    std::vector<std::size_t> ranks(maps.size());
    for (std::size_t j = 0; j < maps.size(); ++j) ranks[j] = rank(maps[j], field);
    std::vector<std::size_t> out(dims.size());
    for (std::size_t p = 0; p < dims.size(); ++p) {
        std::size_t out_rank = p >= 1 ? ranks[p - 1] : 0;        // map leaving position p
        std::size_t in_rank = p < ranks.size() ? ranks[p] : 0;   // map arriving at position p
        out[p] = dims[p] - out_rank - in_rank;
    }
    return out;
}

bool Strand::is_exact(const FieldSpec& field) const {
    auto h = homology(field);
    return std::all_of(h.begin(), h.end(), [](std::size_t d) { return d == 0; });
}

std::optional<Monomial> first_inexact_strand(const FreeComplex& complex, const FieldSpec& field) {
    const auto& gens = complex.ideal_generators();
    if (gens.empty()) return std::nullopt;
    VarTable vars = [&] {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < gens.front().size(); ++i) names.push_back("x" + std::to_string(i));
        return VarTable(names);
    }();
    auto ideal = minimalize_generators(vars, gens);
    for (const Monomial& mu : lcm_lattice(ideal, kHardMaxGens).points)
        if (!strand(complex, mu).is_exact(field)) return mu;
    return std::nullopt;
}

MinimalityReport is_minimal(const FreeComplex& complex) {
    for (std::size_t i = 0; i < complex.diffs().size(); ++i)
        for (const DiffEntry& e : complex.diff(i))
            if (e.mono.is_one() && !is_zero_in(e.coef, complex.field())) return {false, i, e};
    return {};
}

// ---------------------------------------------------------------------------
// Minimization

namespace {

class Cancellation {
public:
    Cancellation(const FreeComplex& h, const FieldSpec& field) : field_(field), mods_(h.modules()) {
        alive_.resize(mods_.size());
        for (std::size_t i = 0; i < mods_.size(); ++i) alive_[i].assign(mods_[i].size(), true);
        cols_.resize(h.diffs().size());
        rows_.resize(h.diffs().size());
        for (std::size_t i = 0; i < h.diffs().size(); ++i) {
            cols_[i].resize(mods_[i + 1].size());
            rows_[i].resize(mods_[i].size());
            for (const DiffEntry& e : h.diff(i)) {
                Coefficient c = normalize(e.coef);
                if (sgn(c) == 0) continue;
                cols_[i][e.col][e.row] = c;
                rows_[i][e.row][e.col] = c;
            }
        }
    }

    struct Pivot {
        std::size_t index, row, col;
    };

    std::vector<Pivot> candidates_at(std::size_t i) const {
        std::vector<Pivot> out;
        for (std::size_t col = 0; col < cols_[i].size(); ++col)
            for (const auto& [row, c] : cols_[i][col])
                if (mods_[i + 1][col].mdeg == mods_[i][row].mdeg) out.push_back({i, row, col});
        return out;
    }

    std::optional<Pivot> smallest() const {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            std::optional<Pivot> best;
            for (std::size_t col = 0; col < cols_[i].size(); ++col) {
                for (const auto& [row, c] : cols_[i][col]) {
                    const Monomial& d = mods_[i + 1][col].mdeg;
                    if (d != mods_[i][row].mdeg) continue;
                    if (!best || degree_then_canonical(d, mods_[i + 1][best->col].mdeg)) best = Pivot{i, row, col};
                }
            }
            if (best) return best;
        }
        return std::nullopt;
    }

    std::optional<Pivot> random(std::mt19937_64& rng) const {
        std::vector<Pivot> all;
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            auto c = candidates_at(i);
            all.insert(all.end(), c.begin(), c.end());
        }
        if (all.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(rng)];
    }

    void cancel(const Pivot& p) {
        const std::size_t i = p.index;
        Coefficient pivot = cols_[i][p.col].at(p.row);
        Coefficient inv = invert(pivot);
        // Copies: the loops below mutate these maps.
        auto column = cols_[i][p.col];
        auto row = rows_[i][p.row];
        for (const auto& [g, a] : column) {
            if (g == p.row) continue;
            for (const auto& [fcol, b] : row) {
                if (fcol == p.col) continue;
                add(i, g, fcol, normalize(-a * b * inv));
            }
        }
        // Drop row p.row and column p.col from d_i.
        for (const auto& [g, a] : cols_[i][p.col]) rows_[i][g].erase(p.col);
        cols_[i][p.col].clear();
        for (const auto& [fcol, b] : rows_[i][p.row]) cols_[i][fcol].erase(p.row);
        rows_[i][p.row].clear();
        // Symbol p.col of F_{i+1} leaves d_{i+1} as a row.
        if (i + 1 < cols_.size()) {
            for (const auto& [src, c] : rows_[i + 1][p.col]) cols_[i + 1][src].erase(p.col);
            rows_[i + 1][p.col].clear();
        }
        // Symbol p.row of F_i leaves d_{i-1} as a column.
        if (i >= 1) {
            for (const auto& [dst, c] : cols_[i - 1][p.row]) rows_[i - 1][dst].erase(p.row);
            cols_[i - 1][p.row].clear();
        }
        alive_[i + 1][p.col] = false;
        alive_[i][p.row] = false;
    }

    FreeComplex result(std::vector<Monomial> ideal_gens) const {
        std::vector<std::vector<BasisSymbol>> mods(mods_.size());
        std::vector<std::vector<std::size_t>> idx(mods_.size());
        for (std::size_t i = 0; i < mods_.size(); ++i) {
            idx[i].assign(mods_[i].size(), 0);
            for (std::size_t k = 0; k < mods_[i].size(); ++k) {
                if (!alive_[i][k]) continue;
                idx[i][k] = mods[i].size();
                mods[i].push_back(mods_[i][k]);
            }
        }
        std::vector<std::vector<DiffEntry>> diffs(cols_.size());
        for (std::size_t i = 0; i < cols_.size(); ++i)
            for (std::size_t col = 0; col < cols_[i].size(); ++col)
                for (const auto& [row, c] : cols_[i][col])
                    diffs[i].push_back(DiffEntry{idx[i][row], idx[i + 1][col], c,
                                                 quotient(mods_[i + 1][col].mdeg, mods_[i][row].mdeg)});
        while (mods.size() > 1 && mods.back().empty()) {
            mods.pop_back();
            diffs.pop_back();
        }
        return FreeComplex(std::move(mods), std::move(diffs), std::move(ideal_gens), field_);
    }

private:
    Coefficient normalize(const Coefficient& c) const {
        return field_.is_rational() ? c : reduce_mod(c, field_.characteristic());
    }
    Coefficient invert(const Coefficient& c) const {
        if (field_.is_rational()) return 1 / c;
        mpz_class inv;
        mpz_class mod(static_cast<unsigned long>(field_.characteristic()));
        mpz_invert(inv.get_mpz_t(), c.get_num().get_mpz_t(), mod.get_mpz_t());
        return Coefficient(inv);
    }
    void add(std::size_t i, std::size_t row, std::size_t col, const Coefficient& v) {
        auto& cell = cols_[i][col][row];
        cell = normalize(cell + v);
        if (sgn(cell) == 0) {
            cols_[i][col].erase(row);
            rows_[i][row].erase(col);
        } else {
            rows_[i][row][col] = cell;
        }
    }

    FieldSpec field_;
    std::vector<std::vector<BasisSymbol>> mods_;
    std::vector<std::vector<bool>> alive_;
    std::vector<std::vector<std::map<std::size_t, Coefficient>>> cols_;  // cols_[i][col][row]
    std::vector<std::vector<std::map<std::size_t, Coefficient>>> rows_;  // rows_[i][row][col]
};

}  // namespace

FreeComplex minimize(const FreeComplex& complex, const FieldSpec& field, const MinimizeOptions& options) {
    if (options.verify_exact) {
        if (auto mu = first_inexact_strand(complex, field)) {
            std::ostringstream msg;
            msg << "minimize: input is not exact in multidegree (";
            for (std::size_t k = 0; k < mu->size(); ++k) msg << (k ? "," : "") << (*mu)[k];
            msg << ")";
            throw DomainError(msg.str());
        }
    }
    Cancellation work(complex, field);
    std::optional<std::mt19937_64> rng;
    if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
    while (true) {
        auto pivot = rng ? work.random(*rng) : work.smallest();
        if (!pivot) break;
        work.cancel(*pivot);
    }
    FreeComplex out = work.result(complex.ideal_generators());
    if (auto bad = d_squared_violation(out)) throw std::logic_error("minimize broke the complex: " + *bad);
    return out;
}

// ---------------------------------------------------------------------------
// Invariants

std::optional<std::string> homogeneity_violation(const FreeComplex& complex) {
    for (std::size_t i = 0; i < complex.diffs().size(); ++i) {
        for (const DiffEntry& e : complex.diff(i)) {
            const Monomial& src = complex.module(i + 1)[e.col].mdeg;
            const Monomial& dst = complex.module(i)[e.row].mdeg;
            if (!divides(dst, src) || product(e.mono, dst) != src)
                return "map " + std::to_string(i) + " entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                       ") is not homogeneous";
        }
    }
    for (const BasisSymbol& s : complex.module(0))
        if (!s.mdeg.is_one()) return std::string("F_0 symbol has multidegree other than 1");
    if (complex.module(0).size() != 1) return std::string("F_0 must have rank 1");
    return std::nullopt;
}

std::optional<std::string> d_squared_violation(const FreeComplex& complex) {
    const FieldSpec& field = complex.field();
    for (std::size_t i = 0; i + 1 < complex.diffs().size(); ++i) {
        // (d_i o d_{i+1})[row][col] grouped by monomial.
        std::map<std::tuple<std::size_t, std::size_t, Monomial>, Coefficient> acc;
        std::vector<std::vector<const DiffEntry*>> by_col(complex.module(i + 1).size());
        for (const DiffEntry& e : complex.diff(i)) by_col[e.col].push_back(&e);
        for (const DiffEntry& outer : complex.diff(i + 1))
            for (const DiffEntry* inner : by_col[outer.row])
                acc[{inner->row, outer.col, product(inner->mono, outer.mono)}] += inner->coef * outer.coef;
        for (const auto& [key, v] : acc)
            if (!is_zero_in(v, field))
                return "d_" + std::to_string(i) + " o d_" + std::to_string(i + 1) + " is nonzero at (" +
                       std::to_string(std::get<0>(key)) + "," + std::to_string(std::get<1>(key)) + ")";
    }
    return std::nullopt;
}

}  // namespace resolve

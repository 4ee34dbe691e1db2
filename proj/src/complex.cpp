#include "resolve/complex.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "resolve/errors.hpp"

namespace resolve {

namespace {

void sort_canonical(std::vector<Face>& faces) { std::sort(faces.begin(), faces.end(), canonical_less); }

std::vector<Monomial> multidegrees_of(std::span<const Face> faces, const MonomialIdeal& ideal) {
    std::vector<Monomial> out;
    out.reserve(faces.size());
    for (Face f : faces) out.push_back(mdeg(f, ideal));
    return out;
}

}  // namespace

Face::Face(std::initializer_list<std::size_t> members) {
    for (std::size_t i : members) *this = with(i);
}

Face Face::from_indices(std::span<const std::size_t> members) {
    Face f;
    for (std::size_t i : members) {
        if (i >= kHardMaxGens) throw DomainError("face index " + std::to_string(i) + " out of range");
        f = f.with(i);
    }
    return f;
}

std::vector<std::size_t> Face::indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

bool canonical_less(Face a, Face b) noexcept {
    if (a.order() != b.order()) return a.order() < b.order();
    std::uint64_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    return (a.mask() & (diff & -diff)) != 0;
}

Monomial mdeg(Face face, const MonomialIdeal& ideal) {
    Monomial out(ideal.nvars());
    for (std::uint64_t m = face.mask(); m != 0; m &= m - 1) {
        auto i = static_cast<std::size_t>(std::countr_zero(m));
        if (i >= ideal.size())
            throw DomainError("face index " + std::to_string(i) + " out of range for " + std::to_string(ideal.size()) +
                              " generators");
        out = lcm(out, ideal.generator(i));
    }
    return out;
}

int orientation_sign(Face f, Face g) noexcept {
    std::uint64_t removed = f.mask() & ~g.mask();
    if (!g.is_subset_of(f) || std::popcount(removed) != 1) return 0;
    // Position of the removed member among F's members, counted from 1.
    int position = std::popcount(f.mask() & (removed - 1)) + 1;
    return position % 2 == 1 ? 1 : -1;
}

SimplicialComplex SimplicialComplex::trusted(std::shared_ptr<const MonomialIdeal> ideal, std::vector<Face> faces,
                                             std::vector<Monomial> mdegs) {
    SimplicialComplex c;
    c.ideal_ = std::move(ideal);
    c.faces_ = std::move(faces);
    c.mdegs_ = std::move(mdegs);
    return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::shared_ptr<const MonomialIdeal> ideal, std::vector<Face> faces) {
    const std::size_t r = ideal->size();
    for (Face f : faces)
        if (r < 64 && (f.mask() >> r) != 0)
            throw DomainError("face uses a generator index >= " + std::to_string(r));
    sort_canonical(faces);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (!is_closed(faces)) throw DomainError("face set is not closed under taking subsets");
    auto mdegs = multidegrees_of(faces, *ideal);
    return trusted(std::move(ideal), std::move(faces), std::move(mdegs));
}

bool SimplicialComplex::contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f, canonical_less); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> counts;
    for (Face f : faces_) {
        if (counts.size() <= f.order()) counts.resize(f.order() + 1, 0);
        ++counts[f.order()];
    }
    return counts;
}

int SimplicialComplex::max_order() const noexcept {
    return faces_.empty() ? -1 : static_cast<int>(faces_.back().order());
}

void require_gen_cap(const MonomialIdeal& ideal, std::size_t max_gens) {
    std::size_t cap = std::min(max_gens, kHardMaxGens);
    if (ideal.size() > cap)
        throw ResourceError("ideal has " + std::to_string(ideal.size()) + " generators, above the cap --max-gens=" +
                            std::to_string(cap));
}

SimplicialComplex full_simplex(const MonomialIdeal& ideal, std::size_t max_gens) {
    return full_simplex(std::make_shared<const MonomialIdeal>(ideal), max_gens);
}

SimplicialComplex full_simplex(std::shared_ptr<const MonomialIdeal> ideal, std::size_t max_gens) {
    require_gen_cap(*ideal, max_gens);
    const std::size_t r = ideal->size();
    const std::uint64_t count = std::uint64_t{1} << r;

    // Multidegrees by mask, built from the mask with its lowest member removed.
    std::vector<Monomial> by_mask(count);
    by_mask[0] = Monomial(ideal->nvars());
    for (std::uint64_t m = 1; m < count; ++m) {
        auto low = static_cast<std::size_t>(std::countr_zero(m));
        by_mask[m] = lcm(by_mask[m & (m - 1)], ideal->generator(low));
    }

    std::vector<Face> faces;
    faces.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) faces.emplace_back(m);
    sort_canonical(faces);
    std::vector<Monomial> mdegs;
    mdegs.reserve(count);
    for (Face f : faces) mdegs.push_back(std::move(by_mask[f.mask()]));
    return SimplicialComplex::trusted(std::move(ideal), std::move(faces), std::move(mdegs));
}

namespace {

template <typename Keep>
SimplicialComplex filter(const SimplicialComplex& c, Keep keep) {
    std::vector<Face> faces;
    std::vector<Monomial> mdegs;
    auto all = c.faces();
    auto degs = c.multidegrees();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (keep(degs[i])) {
            faces.push_back(all[i]);
            mdegs.push_back(degs[i]);
        }
    }
    return SimplicialComplex::trusted(c.ideal_ptr(), std::move(faces), std::move(mdegs));
}

}  // namespace

SimplicialComplex restrict_leq(const SimplicialComplex& complex, const Monomial& mu) {
    return filter(complex, [&](const Monomial& d) { return divides(d, mu); });
}

SimplicialComplex restrict_lt(const SimplicialComplex& complex, const Monomial& mu) {
    return filter(complex, [&](const Monomial& d) { return d != mu && divides(d, mu); });
}

bool is_closed(std::span<const Face> faces) {
    std::unordered_set<std::uint64_t> present;
    for (Face f : faces) present.insert(f.mask());
    for (Face f : faces) {
        for (std::uint64_t m = f.mask(); m != 0; m &= m - 1) {
            std::uint64_t low = m & -m;
            if (!present.contains(f.mask() & ~low)) return false;
        }
    }
    return faces.empty() || present.contains(0);
}

SimplicialComplex close_downward(std::span<const Face> faces, std::shared_ptr<const MonomialIdeal> ideal) {
    std::unordered_set<std::uint64_t> all{0};
    for (Face f : faces) {
        for (std::uint64_t sub = f.mask(); sub != 0; sub = (sub - 1) & f.mask()) all.insert(sub);
    }
    std::vector<Face> out;
    out.reserve(all.size());
    for (std::uint64_t m : all) out.emplace_back(m);
    return SimplicialComplex::from_faces(std::move(ideal), std::move(out));
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ideal_ptr() != b.ideal_ptr() && !(a.ideal() == b.ideal()))
        throw DimensionError("cannot intersect complexes on different ideals");
    std::vector<Face> faces;
    std::vector<Monomial> mdegs;
    auto fa = a.faces();
    auto fb = b.faces();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (canonical_less(fa[i], fb[j])) {
            ++i;
        } else if (canonical_less(fb[j], fa[i])) {
            ++j;
        } else {
            faces.push_back(fa[i]);
            mdegs.push_back(a.multidegrees()[i]);
            ++i;
            ++j;
        }
    }
    return SimplicialComplex::trusted(a.ideal_ptr(), std::move(faces), std::move(mdegs));
}

std::vector<Face> parse_face_set(std::string_view text) {
    std::vector<Face> faces;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line == "()") {
            faces.emplace_back();
            continue;
        }
        std::vector<std::size_t> members;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            std::string_view tok = std::string_view(line).substr(start, comma == std::string::npos ? line.npos : comma - start);
            while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
            while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError("face file line " + std::to_string(line_no) + ": bad index '" + std::string(tok) + "'");
            if (value >= kHardMaxGens)
                throw ParseError("face file line " + std::to_string(line_no) + ": index " + std::to_string(value) +
                                 " out of range");
            members.push_back(value);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        faces.push_back(Face::from_indices(members));
    }
    return faces;
}

std::vector<Face> read_face_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open face file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_face_set(buf.str());
}

std::string format_face_set(std::span<const Face> faces) {
    std::vector<Face> sorted(faces.begin(), faces.end());
    sort_canonical(sorted);
    std::string out;
    for (Face f : sorted) {
        if (f.empty()) {
            out += "()\n";
            continue;
        }
        auto idx = f.indices();
        for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::to_string(idx[k]);
        out += '\n';
    }
    return out;
}

std::string format_face(Face face, const MonomialIdeal& ideal) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : face.indices()) {
        if (!first) out += ',';
        first = false;
        out += i < ideal.size() ? format_monomial(ideal.generator(i), ideal.vars()) : std::to_string(i);
    }
    return out + "}";
}

}  // namespace resolve

#include "resolve/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "resolve/errors.hpp"

namespace resolve {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void require_same_length(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw DimensionError("monomials over " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                             " variables");
}

Exponent add_exponents(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) throw DomainError("exponent overflow");
    return a + b;
}

Exponent parse_exponent(std::string_view digits, std::string_view token) {
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0)
        throw ParseError("malformed exponent in '" + std::string(token) + "'");
    return value;
}

}  // namespace

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw ParseError("variable table is empty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i])) throw ParseError("invalid variable name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == names_[i]) throw ParseError("duplicate variable name '" + names_[i] + "'");
    }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : m.exponents()) {
        h ^= e;
        h *= 0x100000001b3ull;
    }
    return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    std::vector<Exponent> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial quotient(const Monomial& num, const Monomial& den) {
    if (!divides(den, num)) throw DomainError("quotient of non-divisible monomials");
    std::vector<Exponent> out(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) out[i] = num[i] - den[i];
    return Monomial(std::move(out));
}

Monomial product(const Monomial& a, const Monomial& b) {
    require_same_length(a, b);
    std::vector<Exponent> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = add_exponents(a[i], b[i]);
    return Monomial(std::move(out));
}

bool canonical_before(const Monomial& a, const Monomial& b) { return b < a; }

Monomial parse_monomial(std::string_view text, const VarTable& vars) {
    std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty monomial");
    std::vector<Exponent> exps(vars.size(), 0);
    if (body == "1") return Monomial(std::move(exps));

    std::size_t pos = 0;
    while (true) {
        std::size_t star = body.find('*', pos);
        std::string_view term = trim(body.substr(pos, star == std::string_view::npos ? body.npos : star - pos));
        if (term.empty()) throw ParseError("empty factor in '" + std::string(body) + "'");
        std::string_view name = term;
        Exponent power = 1;
        if (auto caret = term.find('^'); caret != std::string_view::npos) {
            name = trim(term.substr(0, caret));
            power = parse_exponent(trim(term.substr(caret + 1)), term);
        }
        auto idx = vars.index_of(name);
        if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'");
        exps[*idx] = add_exponents(exps[*idx], power);
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return Monomial(std::move(exps));
}

Monomial parse_compact_monomial(std::string_view text, const VarTable& vars) {
    std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty monomial");
    std::vector<Exponent> exps(vars.size(), 0);
    if (body == "1") return Monomial(std::move(exps));

    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t best = vars.size();
        std::size_t best_len = 0;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            const std::string& n = vars.name(v);
            if (n.size() > best_len && body.substr(pos, n.size()) == n) {
                best = v;
                best_len = n.size();
            }
        }
        if (best == vars.size()) throw ParseError("unknown variable at '" + std::string(body.substr(pos)) + "'");
        pos += best_len;
        std::size_t digits_end = pos;
        while (digits_end < body.size() && std::isdigit(static_cast<unsigned char>(body[digits_end]))) ++digits_end;
        Exponent power = 1;
        if (digits_end > pos) power = parse_exponent(body.substr(pos, digits_end - pos), body);
        exps[best] = add_exponents(exps[best], power);
        pos = digits_end;
    }
    return Monomial(std::move(exps));
}

std::string format_monomial(const Monomial& m, const VarTable& vars) {
    if (m.size() != vars.size()) throw DimensionError("monomial does not match variable table");
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

bool MonomialIdeal::contains(const Monomial& mu) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, mu); });
}

MonomialIdeal minimalize_generators(VarTable vars, std::vector<Monomial> raw) {
    for (const Monomial& m : raw)
        if (m.size() != vars.size()) throw DimensionError("generator does not match variable table");

    std::sort(raw.begin(), raw.end(), canonical_before);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    MonomialIdeal ideal;
    ideal.vars_ = std::move(vars);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < raw.size() && !redundant; ++j)
            redundant = j != i && divides(raw[j], raw[i]);
        if (!redundant) ideal.gens_.push_back(raw[i]);
    }
    return ideal;
}

void require_nontrivial(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("the zero ideal has no resolution to construct");
    if (ideal.is_unit()) throw DomainError("the unit ideal has no resolution to construct");
}

MonomialIdeal parse_ideal(std::string_view text) {
    std::optional<VarTable> vars;
    std::vector<Monomial> gens;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
        if (!vars) {
            if (line.substr(0, 5) != "vars:") throw ParseError(where() + "expected 'vars:' directive");
            std::vector<std::string> names;
            std::istringstream in{std::string(line.substr(5))};
            for (std::string name; in >> name;) names.push_back(name);
            try {
                vars.emplace(std::move(names));
            } catch (const ParseError& e) {
                throw ParseError(where() + e.what());
            }
            continue;
        }
        try {
            gens.push_back(parse_monomial(line, *vars));
        } catch (const ParseError& e) {
            throw ParseError(where() + e.what());
        }
    }
    if (!vars) throw ParseError("missing 'vars:' directive");
    return minimalize_generators(std::move(*vars), std::move(gens));
}

MonomialIdeal read_ideal_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ideal file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_ideal(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string serialize_ideal(const MonomialIdeal& ideal) {
    std::string out = "vars:";
    for (const std::string& n : ideal.vars().names()) out += ' ' + n;
    out += '\n';
    for (const Monomial& g : ideal.generators()) out += format_monomial(g, ideal.vars()) + '\n';
    return out;
}

}  // namespace resolve

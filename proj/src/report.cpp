#include "resolve/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "resolve/errors.hpp"

namespace resolve {

namespace {

ordered_json exponents_json(const Monomial& m) {
    ordered_json arr = ordered_json::array();
    for (Exponent e : m.exponents()) arr.push_back(e);
    return arr;
}

Monomial monomial_from_json(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("expected an exponent array");
    std::vector<Exponent> exps;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
        exps.push_back(e.get<Exponent>());
    }
    return Monomial(std::move(exps));
}

ordered_json coef_json(const Coefficient& c) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
    return c.get_str();
}

Coefficient coef_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Coefficient(mpz_class(std::to_string(j.get<std::int64_t>())));
    if (j.is_string()) {
        Coefficient c;
        if (c.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + j.get<std::string>() + "'");
        c.canonicalize();
        return c;
    }
    throw ParseError("coefficient must be an integer or a 'p/q' string");
}

}  // namespace

ordered_json free_complex_to_json(const FreeComplex& complex) {
    ordered_json out;
    ordered_json modules = ordered_json::array();
    for (const auto& mod : complex.modules()) {
        ordered_json arr = ordered_json::array();
        for (const BasisSymbol& s : mod) {
            ordered_json sym;
            if (s.face) {
                ordered_json idx = ordered_json::array();
                for (std::size_t i : s.face->indices()) idx.push_back(i);
                sym["face"] = idx;
            } else {
                sym["face"] = nullptr;
            }
            sym["mdeg"] = exponents_json(s.mdeg);
            arr.push_back(sym);
        }
        modules.push_back(arr);
    }
    ordered_json diffs = ordered_json::array();
    for (const auto& d : complex.diffs()) {
        ordered_json arr = ordered_json::array();
        for (const DiffEntry& e : d) {
            ordered_json entry;
            entry["row"] = e.row;
            entry["col"] = e.col;
            entry["coef"] = coef_json(e.coef);
            entry["mono"] = exponents_json(e.mono);
            arr.push_back(entry);
        }
        diffs.push_back(arr);
    }
    out["modules"] = modules;
    out["diffs"] = diffs;
    return out;
}

FreeComplex free_complex_from_json(const ordered_json& json, const FieldSpec& field) {
    try {
        std::vector<std::vector<BasisSymbol>> modules;
        for (const auto& mod : json.at("modules")) {
            std::vector<BasisSymbol> basis;
            for (const auto& sym : mod) {
                BasisSymbol s;
                if (!sym.at("face").is_null()) {
                    std::vector<std::size_t> idx = sym.at("face").get<std::vector<std::size_t>>();
                    s.face = Face::from_indices(idx);
                }
                s.mdeg = monomial_from_json(sym.at("mdeg"));
                basis.push_back(std::move(s));
            }
            modules.push_back(std::move(basis));
        }
        std::vector<std::vector<DiffEntry>> diffs;
        for (const auto& d : json.at("diffs")) {
            std::vector<DiffEntry> entries;
            for (const auto& e : d)
                entries.push_back(DiffEntry{e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>(),
                                            coef_from_json(e.at("coef")), monomial_from_json(e.at("mono"))});
            diffs.push_back(std::move(entries));
        }
        std::vector<Monomial> gens;
        if (!diffs.empty())
            for (const DiffEntry& e : diffs[0])
                if (e.col < (modules.size() > 1 ? modules[1].size() : 0)) gens.push_back(modules[1][e.col].mdeg);
        std::sort(gens.begin(), gens.end(), canonical_before);
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> minimal;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j) redundant = j != i && divides(gens[j], gens[i]);
            if (!redundant) minimal.push_back(gens[i]);
        }
        return FreeComplex(std::move(modules), std::move(diffs), std::move(minimal), field);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("free complex JSON: ") + e.what());
    }
}

std::string format_free_complex(const FreeComplex& complex, const VarTable& vars) {
    std::ostringstream out;
    out << "ranks:";
    for (std::size_t r : complex.ranks()) out << ' ' << r;
    out << '\n';
    auto symbol = [&](const BasisSymbol& s) {
        std::string text = "[";
        if (s.face) {
            auto idx = s.face->indices();
            for (std::size_t k = 0; k < idx.size(); ++k) text += (k ? "," : "") + std::to_string(idx[k]);
        } else {
            text += "?";
        }
        return text + "]@" + format_monomial(s.mdeg, vars);
    };
    for (std::size_t i = 0; i < complex.modules().size(); ++i) {
        out << "F_" << i << ":";
        for (const BasisSymbol& s : complex.module(i)) out << ' ' << symbol(s);
        out << '\n';
    }
    for (std::size_t i = 0; i < complex.diffs().size(); ++i) {
        out << "d_" << i << " (F_" << i + 1 << " -> F_" << i << "):\n";
        for (const DiffEntry& e : complex.diff(i)) {
            out << "  " << symbol(complex.module(i + 1)[e.col]) << " -> " << symbol(complex.module(i)[e.row]) << " : "
                << e.coef.get_str();
            if (!e.mono.is_one()) out << " * " << format_monomial(e.mono, vars);
            out << '\n';
        }
    }
    return out.str();
}

ordered_json betti_to_json(const BettiTable& table) {
    ordered_json out;
    out["field"] = table.field.to_string();
    ordered_json entries = ordered_json::array();
    std::vector<std::pair<std::pair<std::size_t, Monomial>, std::size_t>> sorted(table.entries.begin(),
                                                                                 table.entries.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first < b.first.first;
        return degree_then_canonical(a.first.second, b.first.second);
    });
    for (const auto& [key, value] : sorted) {
        ordered_json e;
        e["index"] = key.first;
        e["mdeg"] = exponents_json(key.second);
        e["value"] = value;
        entries.push_back(e);
    }
    out["entries"] = entries;
    out["totals"] = table.totals();
    return out;
}

std::string format_betti_table(const BettiTable& table) {
    std::map<std::size_t, std::map<std::uint64_t, std::size_t>> grid;
    std::uint64_t max_deg = 0;
    for (const auto& [key, value] : table.entries) {
        grid[key.first][key.second.total_degree()] += value;
        max_deg = std::max(max_deg, key.second.total_degree());
    }
    std::ostringstream out;
    out << "field: " << table.field.to_string() << '\n';
    out << std::setw(6) << "i\\deg";
    for (std::uint64_t d = 0; d <= max_deg; ++d) out << std::setw(5) << d;
    out << std::setw(8) << "total" << '\n';
    for (const auto& [i, row] : grid) {
        out << std::setw(6) << i;
        std::size_t total = 0;
        for (std::uint64_t d = 0; d <= max_deg; ++d) {
            auto it = row.find(d);
            if (it == row.end()) {
                out << std::setw(5) << '.';
            } else {
                out << std::setw(5) << it->second;
                total += it->second;
            }
        }
        out << std::setw(8) << total << '\n';
    }
    return out.str();
}

}  // namespace resolve

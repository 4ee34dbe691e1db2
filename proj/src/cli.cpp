#include "resolve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "resolve/betti.hpp"
#include "resolve/errors.hpp"
#include "resolve/lyubeznik.hpp"
#include "resolve/report.hpp"
#include "resolve/resolution.hpp"
#include "resolve/scarf.hpp"
#include "resolve/selftest.hpp"

namespace resolve {

namespace {

struct RunConfig {
    std::string field_text = "rat";
    std::string format = "text";
    std::size_t max_gens = kDefaultMaxGens;
    std::size_t max_orders = kDefaultMaxOrders;
    std::uint64_t seed = 0;

    FieldSpec field() const { return FieldSpec::parse(field_text); }
    bool json() const { return format == "json"; }
};

std::string mono(const Monomial& m, const MonomialIdeal& ideal) { return format_monomial(m, ideal.vars()); }

ordered_json faces_json(const SimplicialComplex& c) {
    ordered_json arr = ordered_json::array();
    for (Face f : c.faces()) arr.push_back(f.indices());
    return arr;
}

std::string faces_text(const SimplicialComplex& c) {
    std::string out;
    for (Face f : c.faces()) out += "  " + format_face(f, c.ideal()) + " @ " + mono(mdeg(f, c.ideal()), c.ideal()) + "\n";
    return out;
}

ordered_json verdict_json(const SupportVerdict& v, const MonomialIdeal& ideal) {
    ordered_json j;
    j["supported"] = v.supported;
    j["field"] = v.field.to_string();
    if (v.witness) {
        j["witness"] = mono(*v.witness, ideal);
        j["degree"] = v.degree;
        j["dimension"] = v.dimension;
    }
    return j;
}

std::string verdict_text(const SupportVerdict& v, const MonomialIdeal& ideal) {
    if (v.supported) return "supports a resolution over " + v.field.to_string();
    return "does not support a resolution over " + v.field.to_string() + ": restriction to " + mono(*v.witness, ideal) +
           " has reduced homology of dimension " + std::to_string(v.dimension) + " in degree " +
           std::to_string(v.degree);
}

std::string order_text(const TotalOrder& order, const MonomialIdeal& ideal) {
    std::string s;
    for (std::size_t k = 0; k < order.size(); ++k)
        s += (k ? " < " : "") + mono(ideal.generator(order.perm()[k]), ideal);
    return s;
}

TotalOrder parse_order(const std::string& text, const MonomialIdeal& ideal) {
    std::vector<std::size_t> perm;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty()) throw ParseError("--order: empty entry");
        if (std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
            std::size_t idx = std::stoul(tok);
            if (idx >= ideal.size()) throw ParseError("--order: index " + tok + " out of range");
            perm.push_back(idx);
            continue;
        }
        Monomial m = tok.find_first_of("*^") != std::string::npos ? parse_monomial(tok, ideal.vars())
                                                                  : parse_compact_monomial(tok, ideal.vars());
        auto gens = ideal.generators();
        auto it = std::find(gens.begin(), gens.end(), m);
        if (it == gens.end()) throw ParseError("--order: '" + tok + "' is not a minimal generator");
        perm.push_back(static_cast<std::size_t>(it - gens.begin()));
    }
    if (perm.size() != ideal.size())
        throw ParseError("--order must list all " + std::to_string(ideal.size()) + " generators");
    try {
        return TotalOrder(perm);
    } catch (const DomainError&) {
        throw ParseError("--order repeats a generator");
    }
}

int cmd_taylor(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
    FreeComplex t = taylor(ideal, cfg.max_gens);
    if (cfg.json()) {
        out << free_complex_to_json(t).dump() << '\n';
    } else {
        out << "Taylor resolution of " << ideal.size() << " generators\n" << format_free_complex(t, ideal.vars());
        auto m = is_minimal(t);
        out << "minimal: " << (m.minimal ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

int cmd_minimize(const RunConfig& cfg, const MonomialIdeal& ideal, bool shuffle, std::ostream& out) {
    MinimizeOptions opts;
    if (shuffle) opts.shuffle_seed = cfg.seed;
    FreeComplex m = minimize(taylor(ideal, cfg.max_gens), cfg.field(), opts);
    if (cfg.json()) {
        ordered_json j;
        j["field"] = cfg.field().to_string();
        j["complex"] = free_complex_to_json(m);
        out << j.dump() << '\n';
    } else {
        out << "field: " << cfg.field().to_string() << '\n' << format_free_complex(m, ideal.vars());
    }
    return kExitOk;
}

int cmd_scarf(const RunConfig& cfg, const MonomialIdeal& ideal, bool emit_complex, std::ostream& out) {
    ScarfData scarf = scarf_complex(ideal, cfg.max_gens);
    SupportVerdict v = supports_resolution(scarf.complex, cfg.field());
    if (cfg.json()) {
        ordered_json j;
        j["faces"] = faces_json(scarf.complex);
        ordered_json degs = ordered_json::array();
        for (const Monomial& m : scarf.multidegrees) degs.push_back(mono(m, ideal));
        j["multidegrees"] = degs;
        j["is_scarf"] = verdict_json(v, ideal);
        if (emit_complex) j["complex"] = free_complex_to_json(complex_of(scarf.complex, cfg.field()));
        out << j.dump() << '\n';
    } else {
        out << "Scarf complex (" << scarf.complex.size() << " faces):\n" << faces_text(scarf.complex);
        out << "is Scarf: " << (v.supported ? "yes" : "no") << " (" << verdict_text(v, ideal) << ")\n";
        if (emit_complex) out << format_free_complex(complex_of(scarf.complex, cfg.field()), ideal.vars());
    }
    return kExitOk;
}

int cmd_lyubeznik(const RunConfig& cfg, const MonomialIdeal& ideal, const std::string& order_arg, bool all,
                  std::ostream& out, std::ostream& err) {
    if (all == !order_arg.empty()) {
        err << "lyubeznik: give exactly one of --order or --all\n";
        return kExitError;
    }
    if (!all) {
        TotalOrder order = parse_order(order_arg, ideal);
        auto lambda = lyubeznik_complex(ideal, order, cfg.max_gens);
        auto v = lyubeznik_supports(ideal, order, cfg.field(), cfg.max_gens);
        bool ok = v.support.supported && v.cone_certificate;
        if (cfg.json()) {
            ordered_json j;
            j["order"] = order.perm();
            j["faces"] = faces_json(lambda);
            j["support"] = verdict_json(v.support, ideal);
            j["cone_certificate"] = v.cone_certificate;
            out << j.dump() << '\n';
        } else {
            out << "order: " << order_text(order, ideal) << '\n';
            out << "Lyubeznik complex (" << lambda.size() << " faces):\n" << faces_text(lambda);
            out << verdict_text(v.support, ideal) << '\n';
            out << "cone certificate: " << (v.cone_certificate ? "every restriction is a cone" : "FAILED") << '\n';
        }
        return ok ? kExitOk : kExitRefuted;
    }

    auto classes = all_lyubeznik_complexes(ideal, cfg.max_orders, cfg.max_gens);
    if (cfg.json()) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : classes) {
            ordered_json j;
            j["faces"] = faces_json(c.complex);
            ordered_json orders = ordered_json::array();
            for (const auto& o : c.orders) orders.push_back(o.perm());
            j["order_count"] = c.orders.size();
            j["orders"] = orders;
            arr.push_back(j);
        }
        ordered_json j;
        j["distinct_complexes"] = classes.size();
        j["classes"] = arr;
        out << j.dump() << '\n';
    } else {
        out << classes.size() << " distinct Lyubeznik complexes\n";
        for (std::size_t k = 0; k < classes.size(); ++k) {
            const auto& c = classes[k];
            out << "class " << k << ": " << c.complex.size() << " faces, " << c.orders.size() << " orders\n";
            for (const auto& o : c.orders) out << "  order " << order_text(o, ideal) << '\n';
            out << faces_text(c.complex);
        }
    }
    return kExitOk;
}

int cmd_check(const RunConfig& cfg, const MonomialIdeal& ideal, const std::string& face_file, std::ostream& out) {
    auto listed = read_face_file(face_file);
    auto ptr = std::make_shared<const MonomialIdeal>(ideal);
    for (Face f : listed)
        if (!f.empty() && f.indices().back() >= ideal.size())
            throw ParseError(face_file + ": face uses generator index " + std::to_string(f.indices().back()) +
                             " but the ideal has " + std::to_string(ideal.size()) + " generators");
    auto complex = close_downward(listed, ptr);
    std::size_t distinct = 0;
    {
        std::vector<Face> sorted(listed);
        std::sort(sorted.begin(), sorted.end());
        distinct = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    std::size_t added = complex.size() - distinct;
    SupportVerdict v = supports_resolution(complex, cfg.field());
    if (cfg.json()) {
        ordered_json j;
        j["faces"] = faces_json(complex);
        j["closure_added"] = added;
        j["verdict"] = verdict_json(v, ideal);
        out << j.dump() << '\n';
    } else {
        out << "complex: " << complex.size() << " faces (closure added " << added << ")\n";
        out << verdict_text(v, ideal) << '\n';
    }
    return v.supported ? kExitOk : kExitRefuted;
}

int cmd_betti(const RunConfig& cfg, const MonomialIdeal& ideal, bool for_ideal, std::ostream& out, std::ostream& err) {
    FieldSpec field = cfg.field();
    calibrate_betti_index_shift(field);
    BettiTable table = betti_numbers(ideal, field, cfg.max_gens);
    BettiTable check = betti_via_homology(ideal, field, cfg.max_gens);
    if (!table.same_entries(check)) {
        err << "betti: minimized Taylor resolution and lattice homology disagree\n";
        return kExitRefuted;
    }
    if (for_ideal) table = shift_to_ideal(table);
    if (cfg.json()) {
        ordered_json j = betti_to_json(table);
        j["module"] = for_ideal ? "I" : "S/I";
        out << j.dump() << '\n';
    } else {
        out << "Betti table of " << (for_ideal ? "I" : "S/I") << '\n' << format_betti_table(table);
        for (const auto& [key, value] : table.entries)
            out << "  b_" << key.first << "," << mono(key.second, ideal) << " = " << value << '\n';
    }
    return kExitOk;
}

int cmd_intersect(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
    auto report = verify_intersection_theorem(ideal, cfg.max_orders, cfg.max_gens);
    if (cfg.json()) {
        ordered_json j;
        j["holds"] = report.holds;
        j["faces"] = faces_json(report.intersection);
        ordered_json a = ordered_json::array(), b = ordered_json::array();
        for (Face f : report.only_in_intersection) a.push_back(f.indices());
        for (Face f : report.only_in_scarf) b.push_back(f.indices());
        j["only_in_intersection"] = a;
        j["only_in_scarf"] = b;
        out << j.dump() << '\n';
    } else if (report.holds) {
        out << "intersection = Scarf, " << report.intersection.size() << " faces\n" << faces_text(report.intersection);
    } else {
        out << "intersection != Scarf\n";
        for (Face f : report.only_in_intersection) out << "  only in intersection: " << format_face(f, ideal) << '\n';
        for (Face f : report.only_in_scarf) out << "  only in Scarf: " << format_face(f, ideal) << '\n';
    }
    return report.holds ? kExitOk : kExitRefuted;
}

int cmd_selftest(const RunConfig& cfg, std::size_t count, std::ostream& out) {
    auto results = run_selftest(cfg.seed, count);
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
        all = all && r.passed;
    }
    return all ? kExitOk : kExitRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simplicial resolutions of monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--field", cfg.field_text, "Coefficient field: rat or gf:<p>")->envname("RESOLVE_FIELD");
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("RESOLVE_FORMAT");
    app.add_option("--max-gens", cfg.max_gens, "Cap on generators for 2^r enumerations")
        ->check(CLI::Range(std::size_t{1}, kHardMaxGens))
        ->envname("RESOLVE_MAX_GENS");
    app.add_option("--max-orders", cfg.max_orders, "Cap on enumerated total orders")
        ->check(CLI::PositiveNumber)
        ->envname("RESOLVE_MAX_ORDERS");
    app.add_option("--seed", cfg.seed, "Seed for randomized commands")->envname("RESOLVE_SEED");

    std::string ideal_path, face_path, order_arg;
    bool all = false, emit_complex = false, for_ideal = false, shuffle = false;
    std::size_t count = 25;

    auto* taylor_cmd = app.add_subcommand("taylor", "Taylor resolution");
    auto* scarf_cmd = app.add_subcommand("scarf", "Scarf complex and Scarf test");
    auto* lyub_cmd = app.add_subcommand("lyubeznik", "Lyubeznik complex for an order, or the census of all orders");
    auto* check_cmd = app.add_subcommand("check", "Does a simplicial complex support a resolution?");
    auto* betti_cmd = app.add_subcommand("betti", "Multigraded Betti numbers");
    auto* inter_cmd = app.add_subcommand("intersect", "Intersection of all Lyubeznik complexes vs the Scarf complex");
    auto* min_cmd = app.add_subcommand("minimize", "Minimize the Taylor resolution");
    auto* self_cmd = app.add_subcommand("selftest", "Reference examples and randomized properties");

    for (auto* sub : {taylor_cmd, scarf_cmd, lyub_cmd, check_cmd, betti_cmd, inter_cmd, min_cmd})
        sub->add_option("ideal", ideal_path, "Ideal file")->required()->check(CLI::ExistingFile);
    scarf_cmd->add_flag("--emit-complex", emit_complex, "Also print the Scarf free complex");
    lyub_cmd->add_option("--order", order_arg, "Comma-separated generators (names or 0-based indices), smallest first");
    lyub_cmd->add_flag("--all", all, "Enumerate every total order");
    check_cmd->add_option("--complex", face_path, "Face-set file")->required()->check(CLI::ExistingFile);
    betti_cmd->add_flag("--for-ideal", for_ideal, "Report Betti numbers of I instead of S/I");
    min_cmd->add_flag("--shuffle", shuffle, "Random pivot order drawn from --seed");
    self_cmd->add_option("--count", count, "Number of random ideals")->check(CLI::NonNegativeNumber);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        (void)cfg.field();
        if (self_cmd->parsed()) return cmd_selftest(cfg, count, out);

        MonomialIdeal ideal = read_ideal_file(ideal_path);
        if (taylor_cmd->parsed()) return cmd_taylor(cfg, ideal, out);
        require_nontrivial(ideal);
        if (min_cmd->parsed()) return cmd_minimize(cfg, ideal, shuffle, out);
        if (scarf_cmd->parsed()) return cmd_scarf(cfg, ideal, emit_complex, out);
        if (lyub_cmd->parsed()) return cmd_lyubeznik(cfg, ideal, order_arg, all, out, err);
        if (check_cmd->parsed()) return cmd_check(cfg, ideal, face_path, out);
        if (betti_cmd->parsed()) return cmd_betti(cfg, ideal, for_ideal, out, err);
        if (inter_cmd->parsed()) return cmd_intersect(cfg, ideal, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace resolve

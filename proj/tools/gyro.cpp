// Command-line front end: graph generation, exact chromatic invariants,
// coloring-base search over finite abelian groups, certificate verification,
// and the reproduction suite.
//
// Exit codes: 0 success/valid, 1 invalid certificate, 2 input error,
// 3 budget exceeded.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gyro/builtin.hpp"
#include "gyro/coloring.hpp"
#include "gyro/fractional.hpp"
#include "gyro/graph_io.hpp"
#include "gyro/json_io.hpp"
#include "gyro/reproduce.hpp"
#include "gyro/sigma.hpp"

namespace {

using namespace gyro;

constexpr int EXIT_INVALID = 1;
constexpr int EXIT_INPUT = 2;
constexpr int EXIT_BUDGET = 3;

struct Options {
    std::string graph_spec;
    std::vector<std::string> groups;
    int nmax = 8;
    std::uint64_t budget = 50'000'000;
    int threads = 1;
    std::string format = "table";
    std::string out;
    std::uint64_t seed = 42;
    bool skip_slow = false;
    bool inject_fault = false;
    std::string cert_file;
};

json rational_field(const Rational& r) { return rational_to_json(r); }

std::string table_value(const json& v) {
    if (v.is_object() && v.contains("num") && v.contains("den")) {
        Rational r(v["num"].get<std::int64_t>(), v["den"].get<std::int64_t>());
        std::string s = rat_str(r);
        if (rat_den(r) != 1) {
            std::ostringstream approx;
            approx << std::setprecision(4) << std::fixed
                   << rat_num(r).convert_to<double>() / rat_den(r).convert_to<double>();
            s += " (~" + approx.str() + ")";
        }
        return s;
    }
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    return v.dump();
}

/// The JSON document is the source of truth; the table is a flat rendering of
/// its scalar and rational fields.
void render(const json& doc, const Options& opt) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) throw input_error("cannot open output file: " + opt.out);
        out = &file;
    }
    if (opt.format == "json") {
        *out << doc.dump(2) << "\n";
        return;
    }
    std::size_t width = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.value().is_array() || (it.value().is_object() && !it.value().contains("num"))) continue;
        *out << std::left << std::setw((int)width + 2) << it.key() << table_value(it.value()) << "\n";
    }
}

void write_certificate_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open certificate output file: " + path);
    out << j.dump(2) << "\n";
}

int cmd_gen(const Options& opt) {
    Graph g = parse_graph_spec(opt.graph_spec);
    if (opt.out.empty()) {
        write_edge_list(std::cout, g);
    } else {
        std::ofstream out(opt.out);
        if (!out) throw input_error("cannot open output file: " + opt.out);
        write_edge_list(out, g);
    }
    return 0;
}

int cmd_invariants(const Options& opt) {
    Graph g = parse_graph_spec(opt.graph_spec);
    auto alpha = independence_number(g);
    int omega = clique_number(g);
    auto chi = chromatic_number(g);
    auto chi_f = fractional_chromatic(g, opt.budget);
    auto chi_c = circular_chromatic(g);

    json doc;
    doc["graph"] = g.label;
    doc["n"] = g.n;
    doc["m"] = g.edge_count();
    doc["alpha"] = alpha.alpha;
    doc["omega"] = omega;
    doc["chi"] = chi.chi;
    doc["chi_f"] = rational_field(chi_f.value);
    doc["chi_c"] = rational_field(chi_c.value);
    if (opt.format == "json") {
        doc["witnesses"]["independent_set"] = alpha.witness;
        doc["witnesses"]["coloring"] = chi.coloring;
        doc["witnesses"]["circular_clique"] = json{{"p", chi_c.p}, {"q", chi_c.q}};
        doc["witnesses"]["circular_hom"] = chi_c.hom;
        json primal = json::array();
        for (std::size_t i = 0; i < chi_f.primal_sets.size(); ++i)
            primal.push_back(json{{"set", chi_f.primal_sets[i]}, {"weight", rational_field(chi_f.primal_weights[i])}});
        doc["witnesses"]["fractional_primal"] = std::move(primal);
        json dual = json::array();
        for (const auto& y : chi_f.dual) dual.push_back(rational_field(y));
        doc["witnesses"]["fractional_dual"] = std::move(dual);
    }
    render(doc, opt);
    return 0;
}

int cmd_bounds(const Options& opt) {
    Graph g = parse_graph_spec(opt.graph_spec);
    std::vector<AbelianGroup> extras;
    for (const auto& spec : opt.groups) extras.push_back(parse_group_spec(spec));

    bool inexact = false;
    json doc;
    doc["graph"] = g.label;

    auto chi_f = fractional_chromatic(g, opt.budget);
    doc["chi_f"] = rational_field(chi_f.value);

    LowerBoundResult low{chi_f.value, "fractional"};
    try {
        low = gyro_lower_bound(g, true, opt.budget);
    } catch (const budget_error&) {
        inexact = true;
        doc["lower_inexact"] = true;
    }
    doc["gyro_lower"] = rational_field(low.bound);
    doc["lower_provenance"] = low.provenance;

    // seed with any built-in certificate that verifies on this graph
    std::vector<BaseCertificate> seeds;
    try {
        auto builtin = discretize(gyrocoloring_40_7(), g.label);
        if ((int)builtin.f.size() == g.n && verify_base(g, builtin).valid) seeds.push_back(builtin);
    } catch (const input_error&) {
    }

    auto up = gyro_upper_bound(g, opt.nmax, extras, opt.budget, seeds, opt.threads);
    if (!up.exact) {
        inexact = true;
        doc["upper_inexact"] = true;
    }
    doc["gyro_upper"] = rational_field(up.bound);

    try {
        Budget chi_budget(opt.budget);
        auto chi_c = circular_chromatic(g, &chi_budget);
        doc["chi_c"] = rational_field(chi_c.value);
        auto chi = chromatic_number(g);
        doc["chi"] = chi.chi;
    } catch (const budget_error&) {
        inexact = true;
        doc["chi_c_inexact"] = true;
    }

    std::string cert_path = opt.out.empty() ? "certificate.json" : opt.out + ".certificate.json";
    write_certificate_file(cert_path, certificate_to_json(up.certificate));
    doc["certificate_file"] = cert_path;

    if (low.bound > up.bound) throw std::logic_error("lower bound exceeds upper bound");
    render(doc, opt);
    if (opt.format == "table") {
        std::cout << "chi_f " << rat_str(chi_f.value) << " <= [" << rat_str(low.bound) << ", " << rat_str(up.bound)
                  << "]";
        if (doc.contains("chi_c")) {
            Rational cc(doc["chi_c"]["num"].get<std::int64_t>(), doc["chi_c"]["den"].get<std::int64_t>());
            std::cout << " <= chi_c " << rat_str(cc);
        }
        std::cout << "  certificate: " << cert_path << "\n";
    }
    return inexact ? EXIT_BUDGET : 0;
}

int cmd_search(const Options& opt) {
    Graph g = parse_graph_spec(opt.graph_spec);
    if (opt.groups.size() != 1) throw input_error("search needs exactly one --group");
    AbelianGroup Z = parse_group_spec(opt.groups[0]);
    auto res = sigma_group_exact(g, Z, opt.budget, opt.threads);

    json doc;
    doc["graph"] = g.label;
    doc["group"] = Z.str();
    doc["density"] = rational_field(res.density);
    doc["exact"] = res.exact;
    doc["nodes"] = res.nodes_used;
    if (res.certificate) {
        json cert = certificate_to_json(*res.certificate);
        doc["certificate"] = cert;
        if (!opt.out.empty()) write_certificate_file(opt.out, cert);
    } else {
        doc["certificate"] = nullptr;
    }
    // --out holds the certificate; the report always goes to stdout
    Options stdout_opt = opt;
    stdout_opt.out.clear();
    render(doc, stdout_opt);
    return res.exact ? 0 : EXIT_BUDGET;
}

int cmd_verify(const Options& opt) {
    Graph g = parse_graph_spec(opt.graph_spec);
    std::ifstream in(opt.cert_file);
    if (!in) throw input_error("cannot open certificate file: " + opt.cert_file);
    std::stringstream buf;
    buf << in.rdbuf();
    json j = parse_json_text(buf.str());

    BaseValidity validity{false, std::nullopt, ""};
    if (j.contains("z")) {
        auto coloring = gyrocoloring_from_json(j);
        validity = verify_gyrocoloring(g, coloring);
    } else {
        auto parsed = certificate_from_json(j);
        for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
        validity = verify_base(g, parsed.cert);
    }
    if (validity.valid) {
        std::cout << "valid\n";
        return 0;
    }
    std::cerr << "invalid: " << validity.message;
    if (validity.violation) {
        std::cerr << " [edge " << validity.violation->u << "-" << validity.violation->v << ", element (";
        for (std::size_t i = 0; i < validity.violation->collision.size(); ++i)
            std::cerr << (i ? "," : "") << validity.violation->collision[i];
        std::cerr << ")]";
    }
    std::cerr << "\n";
    std::cout << "invalid\n";
    return EXIT_INVALID;
}

int cmd_reproduce(const Options& opt) {
    ReproduceOptions ropt;
    ropt.skip_slow = opt.skip_slow;
    ropt.seed = opt.seed;
    ropt.budget = opt.budget;
    ropt.threads = opt.threads;
    ropt.inject_fault = opt.inject_fault;
    auto results = run_reproduction(ropt);

    json doc = json::array();
    for (const auto& r : results)
        doc.push_back(json{{"id", r.id},
                           {"name", r.name},
                           {"status", r.skipped ? "skip" : (r.pass ? "pass" : "FAIL")},
                           {"flagged", r.flagged},
                           {"expected", r.expected},
                           {"computed", r.computed},
                           {"seconds", r.seconds}});
    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& entry : doc) {
            std::printf("%-4s %2d  %-55s %7.2fs  expected: %s | computed: %s%s\n",
                        entry["status"].get<std::string>().c_str(), entry["id"].get<int>(),
                        entry["name"].get<std::string>().c_str(), entry["seconds"].get<double>(),
                        entry["expected"].get<std::string>().c_str(), entry["computed"].get<std::string>().c_str(),
                        entry["flagged"].get<bool>() ? " [flagged]" : "");
        }
    }
    int fails = count_failures(results);
    if (fails) std::printf("%d criterion(s) failed\n", fails);
    return fails ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic invariants and coloring-base certificates"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph)
            cmd->add_option("--graph", opt.graph_spec, "graph spec (DSL, edge-list path, or - for stdin)")->required();
        cmd->add_option("--budget", opt.budget, "node/column budget")->check(CLI::PositiveNumber);
        cmd->add_option("--threads", opt.threads, "worker count for the search")->check(CLI::PositiveNumber);
        cmd->add_option("--format", opt.format, "table or json")->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--out", opt.out, "output path");
        cmd->add_option("--seed", opt.seed, "seed for random corpora");
    };

    auto* gen = app.add_subcommand("gen", "emit a graph as an edge list");
    add_common(gen, true);

    auto* invariants = app.add_subcommand("invariants", "alpha, omega, chi, chi_f, chi_c with witnesses");
    add_common(invariants, true);

    auto* bounds = app.add_subcommand("bounds", "gyrochromatic bounds with certificate");
    add_common(bounds, true);
    bounds->add_option("--nmax", opt.nmax, "scan cyclic groups Z_2..Z_nmax")->check(CLI::PositiveNumber);
    bounds->add_option("--group", opt.groups, "extra group spec (repeatable)");

    auto* search = app.add_subcommand("search", "best coloring base over a single group");
    add_common(search, true);
    search->add_option("--group", opt.groups, "group spec, e.g. 12 or 5x5")->required();

    auto* verify = app.add_subcommand("verify", "verify a certificate file against a graph");
    add_common(verify, true);
    verify->add_option("certificate", opt.cert_file, "certificate JSON file")->required();

    auto* reproduce = app.add_subcommand("reproduce", "run the full reproduction suite");
    add_common(reproduce, false);
    reproduce->add_flag("--skip-slow", opt.skip_slow, "skip the slow criteria");
    reproduce->add_flag("--inject-fault", opt.inject_fault, "corrupt the built-in coloring (self-test)")
        ->group(""); // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(opt);
        if (invariants->parsed()) return cmd_invariants(opt);
        if (bounds->parsed()) return cmd_bounds(opt);
        if (search->parsed()) return cmd_search(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (reproduce->parsed()) return cmd_reproduce(opt);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return EXIT_BUDGET;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_INPUT;
    }
    return 0;
}

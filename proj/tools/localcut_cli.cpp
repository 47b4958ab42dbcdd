// localcut: command-line front end.
//
// Exit codes: 0 success, 1 a checked inequality failed, 2 usage error.
// Like-minded neighbours are counted with equality: a node's like-count is the
// number of neighbours that drew the same random label as the node itself.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "localcut/localcut.hpp"

namespace {

using namespace localcut;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DegreeRange {
    int lo = 0;
    int hi = 0;
};

// "7" or "2..32" (inclusive).
DegreeRange parse_range(const std::string& text) {
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            std::size_t used = 0;
            int d = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {d, d};
        }
        std::size_t used_lo = 0, used_hi = 0;
        std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        DegreeRange r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size() || r.lo > r.hi) throw std::invalid_argument(text);
        return r;
    } catch (const std::logic_error&) {
        throw UsageError("invalid degree or range '" + text + "' (expected N or A..B)");
    }
}

DegreeRange checked_range(const std::string& text) {
    auto r = parse_range(text);
    if (r.lo < 2) throw UsageError("degree must be at least 2");
    return r;
}

std::string format_double(double x) {
    std::ostringstream s;
    s << std::setprecision(15) << x;
    return s.str();
}

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

struct Common {
    std::string format;
    std::string out;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw UsageError("unsupported --format '" + format + "'");
}

// ---------------------------------------------------------------------------

int cmd_build_ngraph(const std::string& degree, const Common& c) {
    require_format(c.format, {"text", "json"});
    auto r = checked_range(degree);
    if (r.lo != r.hi) throw UsageError("build-ngraph takes a single degree");
    auto g = build_ngraph(r.lo);
    Output out(c.out);
    if (c.format == "json") {
        out.stream() << ngraph_to_json(g).dump(2) << '\n';
    } else {
        write_ngraph_text(out.stream(), g);
    }
    return kExitOk;
}

int cmd_solve(const std::string& degree, const Common& c) {
    require_format(c.format, {"text", "json", "csv"});
    auto r = checked_range(degree);
    if (r.hi > kMaxExhaustiveDegree) {
        throw UsageError("exhaustive search supports d <= " + std::to_string(kMaxExhaustiveDegree) +
                         "; use `localcut export-wcnf --d " + std::to_string(r.hi) +
                         "` and an external MaxSAT solver for larger degrees");
    }
    Output out(c.out);
    nlohmann::json rows = nlohmann::json::array();
    if (c.format == "csv") out.stream() << "d,weight_num,weight_den,weight_float,tau,cut\n";
    for (int d = r.lo; d <= r.hi; ++d) {
        auto result = brute_force_max_cut(build_ngraph(d));
        auto tau = threshold_of(d, result.cut);
        const std::string tau_text = tau ? std::to_string(*tau) : "none";
        if (c.format == "json") {
            rows.push_back({{"d", d},
                            {"weight", to_fraction_string(result.weight)},
                            {"weight_float", to_double(result.weight)},
                            {"tau", tau ? nlohmann::json(*tau) : nlohmann::json(nullptr)},
                            {"cut", to_string(result.cut)}});
        } else if (c.format == "csv") {
            out.stream() << d << ',' << numerator(result.weight) << ',' << denominator(result.weight) << ','
                         << format_double(to_double(result.weight)) << ',' << tau_text << ','
                         << to_string(result.cut) << '\n';
        } else {
            out.stream() << "d=" << d << " weight=" << to_fraction_string(result.weight) << " ("
                         << format_double(to_double(result.weight)) << ") tau=" << tau_text
                         << " cut=" << to_string(result.cut) << '\n';
        }
    }
    if (c.format == "json") out.stream() << rows.dump(2) << '\n';
    return kExitOk;
}

int cmd_export_wcnf(const std::string& degree, const Common& c) {
    auto r = checked_range(degree);
    if (r.lo != r.hi) throw UsageError("export-wcnf takes a single degree");
    Output out(c.out);
    write_wcnf(out.stream(), export_wcnf(build_ngraph(r.lo)));
    return kExitOk;
}

int cmd_sweep(const std::string& degree, bool opt, const Common& c) {
    require_format(c.format, {"csv", "json"});
    auto r = checked_range(degree);
    Output out(c.out);
    nlohmann::json rows = nlohmann::json::array();
    if (opt) {
        if (c.format == "csv") {
            out.stream() << "d,tau_opt,tau_formula,alpha_opt_float,our_bound_float,shearer_bound_float,"
                            "alpha_formula_float\n";
        }
        for (int d = r.lo; d <= r.hi; ++d) {
            auto best = optimal_tau(d);
            const int tf = tau_formula(d);
            const double alpha_formula = to_double(AlphaTable(d).closed_form(tf));
            if (c.format == "csv") {
                out.stream() << d << ',' << best.tau << ',' << tf << ',' << format_double(to_double(best.alpha)) << ','
                             << format_double(our_bound(d).approx()) << ','
                             << format_double(shearer_bound(d).approx()) << ',' << format_double(alpha_formula)
                             << '\n';
            } else {
                rows.push_back({{"d", d},
                                {"tau_opt", best.tau},
                                {"ties", best.ties},
                                {"tau_formula", tf},
                                {"alpha_opt", to_fraction_string(best.alpha)},
                                {"alpha_opt_float", to_double(best.alpha)},
                                {"our_bound_float", our_bound(d).approx()},
                                {"shearer_bound_float", shearer_bound(d).approx()},
                                {"alpha_formula_float", alpha_formula}});
            }
        }
    } else {
        if (c.format == "csv") out.stream() << "d,tau,alpha_num,alpha_den,alpha_float\n";
        for (int d = r.lo; d <= r.hi; ++d) {
            // One neighbourhood graph per degree serves every tau <= d/2.
            std::optional<WeightedNgraph> g;
            AlphaTable table(d);
            for (int tau = 0; tau <= d + 1; ++tau) {
                Rational a;
                if (2 * tau > d) {
                    a = table.closed_form(tau);
                } else {
                    if (!g) g.emplace(d);
                    a = evaluate_cut(*g, threshold_assignment(ThresholdRule(d, tau)));
                }
                if (c.format == "csv") {
                    out.stream() << d << ',' << tau << ',' << numerator(a) << ',' << denominator(a) << ','
                                 << format_double(to_double(a)) << '\n';
                } else {
                    rows.push_back({{"d", d},
                                    {"tau", tau},
                                    {"alpha", to_fraction_string(a)},
                                    {"alpha_float", to_double(a)}});
                }
            }
        }
    }
    if (c.format == "json") out.stream() << rows.dump(2) << '\n';
    return kExitOk;
}

std::vector<long> parse_n_list(const std::string& text) {
    std::vector<long> r;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            r.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("invalid --n entry '" + item + "'");
        }
    }
    if (r.empty()) throw UsageError("--n needs at least one value");
    return r;
}

int cmd_verify(bool bound, int dmax, bool appendix, const std::string& n_list, unsigned max_bits, bool details,
               const Common& c) {
    require_format(c.format, {"json"});
    if (bound == appendix) throw UsageError("verify needs exactly one of --bound or --appendix");
    Output out(c.out);
    if (bound) {
        if (dmax < 2) throw UsageError("--dmax must be at least 2");
        auto report = verify_theorem_bound(dmax);
        out.stream() << to_json(report, details).dump(2) << '\n';
        return report.pass() ? kExitOk : kExitVerificationFailed;
    }
    auto ns = parse_n_list(n_list);
    for (long n : ns) {
        if (n < kAppendixMinN) throw UsageError("appendix estimates need n >= 1500");
    }
    if (max_bits < 64) throw UsageError("--max-bits must be at least 64");
    auto report = verify_appendix_estimates(ns, max_bits);
    out.stream() << to_json(report).dump(2) << '\n';
    return report.pass() ? kExitOk : kExitVerificationFailed;
}

struct GraphOptions {
    std::string family = "kdd";
    int d = 3;
    int n = 0;
    std::string graph_path;
};

RegularGraph make_graph(const GraphOptions& o, std::uint64_t seed, GenerationInfo* info) {
    const auto& f = o.family;
    if (f == "file") {
        if (o.graph_path.empty()) throw UsageError("--family file needs --graph <path>");
        std::ifstream in(o.graph_path);
        if (!in) throw UsageError("cannot open graph file '" + o.graph_path + "'");
        return read_edge_list(in);
    }
    if (f == "kdd") return gen_fixed(Family::complete_bipartite, o.d);
    if (f == "cycle") return gen_fixed(Family::cycle, o.n);
    if (f == "hypercube") return gen_fixed(Family::hypercube, o.d);
    if (f == "petersen") return gen_fixed(Family::petersen);
    if (f == "bipartite") return gen_random_bipartite_regular(o.n, o.d, seed, info);
    if (f == "triangle-free") return gen_random_triangle_free(o.n, o.d, seed, info);
    if (f == "random-regular") return gen_random_regular(o.n, o.d, seed, info);
    if (f == "star") return star_graph(o.n, o.d);
    if (f == "path") return path_graph(o.n, o.d);
    if (f == "prism") return prism_graph();
    throw UsageError("unknown family '" + f + "'");
}

int cmd_gen_graph(const GraphOptions& o, std::uint64_t seed, const Common& c) {
    GenerationInfo info;
    auto g = make_graph(o, seed, &info);
    if (info.attempts > 0) {
        std::cerr << "generated after " << info.attempts << " attempt(s), acceptance rate "
                  << format_double(info.acceptance_rate()) << '\n';
    }
    Output out(c.out);
    write_edge_list(out.stream(), g);
    return kExitOk;
}

int cmd_simulate(const GraphOptions& o, const std::string& alg, std::optional<int> tau, std::size_t trials,
                 std::uint64_t seed, bool per_edge, bool allow_triangles, const Common& c) {
    require_format(c.format, {"json", "csv"});
    if (trials < 1) throw UsageError("--trials must be at least 1");
    GenerationInfo info;
    auto g = make_graph(o, seed, &info);
    const auto policy = allow_triangles ? TrianglePolicy::allow : TrianglePolicy::reject;
    const int d = (alg == "virtual") ? o.d : g.declared_degree();
    AlgorithmSpec spec;
    if (alg == "uniform") {
        spec = AlgorithmSpec::uniform();
    } else if (alg == "threshold") {
        spec = AlgorithmSpec::threshold(tau.value_or(d >= 2 ? tau_formula(d) : 0), policy);
    } else if (alg == "shearer") {
        spec = AlgorithmSpec::shearer(policy);
    } else if (alg == "virtual") {
        spec = AlgorithmSpec::virtual_neighbour(d, tau.value_or(d >= 2 ? tau_formula(d) : 0), policy);
    } else {
        throw UsageError("unknown --alg '" + alg + "'");
    }
    auto stats = monte_carlo(g, spec, trials, seed, {per_edge});
    Output out(c.out);
    if (c.format == "csv") {
        write_csv(out.stream(), stats);
    } else {
        auto j = to_json(stats);
        j["algorithm"] = to_string(spec.kind);
        if (spec.kind == AlgorithmKind::threshold || spec.kind == AlgorithmKind::virtual_neighbour) {
            j["tau"] = spec.tau;
        }
        j["d"] = d;
        j["nodes"] = g.node_count();
        if (d >= 2 && (spec.kind == AlgorithmKind::threshold || spec.kind == AlgorithmKind::virtual_neighbour)) {
            j["alpha_exact"] = to_fraction_string(alpha(spec.tau, d));
        }
        out.stream() << j.dump(2) << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesis, exact analysis and simulation of one-round cut algorithms on d-regular "
                 "triangle-free graphs"};
    app.require_subcommand(1);

    Common common;

    std::string degree;
    bool opt = false;
    bool bound = false, appendix = false, details = false;
    int dmax = 3000;
    std::string n_list = "1500,2000,3000";
    unsigned max_bits = 4096;
    GraphOptions graph;
    std::string alg = "threshold";
    std::optional<int> tau;
    std::size_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
    bool entropy = false, per_edge = false, allow_triangles = false;

    auto* build = app.add_subcommand("build-ngraph", "Print the weighted neighbourhood graph");
    build->add_option("--d", degree, "Degree d >= 2")->required();

    auto* solve = app.add_subcommand("solve", "Exhaustive maximum-weight cut of the neighbourhood graph (d <= 12)");
    solve->add_option("--d", degree, "Degree or inclusive range A..B")->required();

    auto* wcnf = app.add_subcommand("export-wcnf", "Weighted MaxSAT encoding of the max-cut instance");
    wcnf->add_option("--d", degree, "Degree d >= 2")->required();

    auto* sweep = app.add_subcommand("sweep", "Exact alpha(tau, d) sweep or optimal-threshold table (CSV)");
    sweep->add_option("--d", degree, "Degree or inclusive range A..B")->required();
    sweep->add_flag("--opt", opt, "One row per degree with the optimal threshold");

    auto* verify = app.add_subcommand("verify", "Exact bound verification or certified appendix estimates");
    verify->add_flag("--bound", bound, "Check alpha(ceil((d+sqrt d)/2), d) >= 1/2 + 9/(32 sqrt d)");
    verify->add_option("--dmax", dmax, "Largest degree for --bound")->capture_default_str();
    verify->add_flag("--details", details, "Include the per-degree records for --bound");
    verify->add_flag("--appendix", appendix, "Certify the binomial estimates used for large d");
    verify->add_option("--n", n_list, "Comma-separated n values (each >= 1500)")->capture_default_str();
    verify->add_option("--max-bits", max_bits, "Precision cap for interval enclosures")->capture_default_str();

    auto add_graph_options = [&](CLI::App* sub) {
        sub->add_option("--family", graph.family,
                        "kdd|cycle|hypercube|petersen|bipartite|triangle-free|random-regular|star|path|prism|file")
            ->capture_default_str();
        sub->add_option("--d", graph.d, "Degree (bound)")->capture_default_str();
        sub->add_option("--n", graph.n, "Size: nodes per side, cycle/path length, node count or star leaves");
        sub->add_option("--graph", graph.graph_path, "Edge-list file for --family file");
        sub->add_option("--seed", seed, "Random seed (default 0xC0FFEE)");
        sub->add_flag("--entropy", entropy, "Draw the seed from the system entropy source");
    };

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the expected cut weight");
    add_graph_options(simulate);
    simulate->add_option("--alg", alg, "uniform|threshold|shearer|virtual")->capture_default_str();
    simulate->add_option("--tau", tau, "Threshold (default: ceil((d+sqrt d)/2))");
    simulate->add_option("--trials", trials, "Number of independent trials")->capture_default_str();
    simulate->add_flag("--per-edge", per_edge, "Report per-edge cut counts");
    simulate->add_flag("--allow-triangles", allow_triangles, "Run on graphs that contain triangles");

    auto* gen = app.add_subcommand("gen-graph", "Generate a graph and print it as an edge list");
    add_graph_options(gen);

    for (auto* sub : {build, solve, wcnf, sweep, verify, simulate, gen}) {
        sub->add_option("--out", common.out, "Write output to this path instead of stdout");
    }
    std::string format;
    build->add_option("--format", format, "text|json");
    solve->add_option("--format", format, "text|json|csv");
    sweep->add_option("--format", format, "csv|json");
    verify->add_option("--format", format, "json");
    simulate->add_option("--format", format, "json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (entropy) seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
        auto pick = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };
        if (build->parsed()) {
            common.format = pick("text");
            return cmd_build_ngraph(degree, common);
        }
        if (solve->parsed()) {
            common.format = pick("text");
            return cmd_solve(degree, common);
        }
        if (wcnf->parsed()) return cmd_export_wcnf(degree, common);
        if (sweep->parsed()) {
            common.format = pick("csv");
            return cmd_sweep(degree, opt, common);
        }
        if (verify->parsed()) {
            common.format = pick("json");
            return cmd_verify(bound, dmax, appendix, n_list, max_bits, details, common);
        }
        if (simulate->parsed()) {
            common.format = pick("json");
            return cmd_simulate(graph, alg, tau, trials, seed, per_edge, allow_triangles, common);
        }
        if (gen->parsed()) return cmd_gen_graph(graph, seed, common);
    } catch (const std::exception& e) {
        // Invalid parameters surface as UsageError, std::invalid_argument,
        // std::out_of_range or BudgetExhausted; all count as usage errors.
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

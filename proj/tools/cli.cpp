#include "cli.hpp"

#include "ricci/ricci.hpp"
#include "ricci/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace ricci::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read graph file '" + path + "'");
    return parse_edge_list(in);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

const std::map<std::string, Route> kRoutes{
    {"auto", Route::automatic}, {"transport", Route::transport}, {"assignment", Route::assignment}};

const std::map<std::string, SweepMode> kModes{{"threshold", SweepMode::threshold},
                                              {"diameter", SweepMode::diameter},
                                              {"proof-bound", SweepMode::proof_bound},
                                              {"proof_bound", SweepMode::proof_bound}};

struct EdgeArgs {
    std::string graph;
    Vertex u = 0;
    Vertex v = 0;
    std::string alpha;
    std::string path = "auto";
    bool verify_mode = false;
    bool fail_on_negative = false;
};

struct AllArgs {
    std::string graph;
    std::string alpha;
    std::string format = "tsv";
    std::string path = "transport";
    std::size_t threads = default_thread_count();
    bool fail_on_negative = false;
};

struct IdlenessArgs {
    std::string graph;
    Vertex u = 0;
    Vertex v = 0;
    std::string out;
    std::string format = "csv";
};

struct GenArgs {
    std::string out;
    std::size_t l = 2;
    std::size_t n = 3;
    std::size_t d = 1;
    std::size_t delta = 0;
    std::uint64_t seed = 1;
};

struct VerifyArgs {
    std::string graph;
    std::size_t l = 2;
    std::size_t threads = default_thread_count();
};

struct SweepArgs {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t samples = 1;
    std::uint64_t seed = 1;
    std::string mode = "threshold";
    std::size_t threads = default_thread_count();
};

std::optional<Rational> parse_alpha(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

/// LLY by the requested route. In verify mode an equal-degree edge is
/// computed both ways and a disagreement is reported.
Rational edge_lly(const Graph& g, Vertex u, Vertex v, Route route, bool verify_mode, bool& mismatch) {
    const Rational k = lly_curvature(g, u, v, route).kappa;
    if (verify_mode && g.degree(u) == g.degree(v)) {
        const Rational other = route == Route::transport ? lly_equal_degree(g, u, v).kappa : kappa_lly(g, u, v).kappa;
        if (other != k) mismatch = true;
    }
    return k;
}

int cmd_edge(const EdgeArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(a.graph);
    const auto alpha = parse_alpha(a.alpha);
    Rational k;
    bool mismatch = false;
    if (alpha) {
        k = kappa_alpha(g, a.u, a.v, *alpha).kappa;
        out << "kappa_alpha(" << to_string(*alpha) << ") " << a.u << " " << a.v << " = " << to_string(k) << "\n";
    } else {
        k = edge_lly(g, a.u, a.v, kRoutes.at(a.path), a.verify_mode, mismatch);
        out << "kappa " << a.u << " " << a.v << " = " << to_string(k) << "\n";
    }
    if (mismatch) {
        err << "route mismatch: assignment and transport disagree on edge " << a.u << " " << a.v << "\n";
        return kExitFinding;
    }
    return a.fail_on_negative && k < 0 ? kExitFinding : kExitOk;
}

int cmd_all(const AllArgs& a, std::ostream& out) {
    if (a.format != "tsv" && a.format != "json") throw UsageError("--format must be tsv or json");
    const Graph g = load_graph(a.graph);
    const auto alpha = parse_alpha(a.alpha);
    bool negative = false;
    auto json = nlohmann::json::array();
    if (alpha) {
        for (const auto& k : all_kappa_alpha(g, *alpha, a.threads)) {
            negative = negative || k.kappa < 0;
            if (a.format == "json") {
                json.push_back(curvature_to_json(k));
            } else {
                out << k.x << "\t" << k.y << "\t" << to_string(k.kappa) << "\n";
            }
        }
    } else {
        for (const auto& k : all_lly(g, kRoutes.at(a.path), a.threads)) {
            negative = negative || k.kappa < 0;
            if (a.format == "json") {
                json.push_back(curvature_to_json(k));
            } else {
                out << k.x << "\t" << k.y << "\t" << to_string(k.kappa) << "\n";
            }
        }
    }
    if (a.format == "json") out << json.dump(2) << "\n";
    return a.fail_on_negative && negative ? kExitFinding : kExitOk;
}

int cmd_idleness(const IdlenessArgs& a, std::ostream& out) {
    if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");
    const Graph g = load_graph(a.graph);
    const auto f = idleness_function(g, a.u, a.v);
    write_output(a.out, a.format == "csv" ? idleness_to_csv(f) : idleness_to_json(f).dump(2) + "\n", out);
    return kExitOk;
}

int emit_report(const TheoremReport& r, std::ostream& out) {
    out << report_to_json(r).dump() << "\n";
    return r.violation() ? kExitFinding : kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ollivier-Ricci and Lin-Lu-Yau curvature on finite simple graphs", "ricci"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ricci 1.0");

    EdgeArgs edge;
    auto* edge_cmd = app.add_subcommand("edge", "Curvature of one edge");
    edge_cmd->add_option("--graph", edge.graph, "Edge-list file")->required();
    edge_cmd->add_option("--u", edge.u, "First endpoint")->required();
    edge_cmd->add_option("--v", edge.v, "Second endpoint")->required();
    edge_cmd->add_option("--alpha", edge.alpha, "Idleness p/q; Lin-Lu-Yau curvature when omitted");
    edge_cmd->add_option("--path", edge.path, "auto, transport or assignment")
        ->check(CLI::IsMember({"auto", "transport", "assignment"}));
    edge_cmd->add_flag("--verify-mode", edge.verify_mode, "Cross-check the assignment and transport routes");
    edge_cmd->add_flag("--fail-on-negative", edge.fail_on_negative, "Exit 1 when the curvature is negative");

    AllArgs all;
    auto* all_cmd = app.add_subcommand("all", "Curvature of every edge");
    all_cmd->add_option("--graph", all.graph, "Edge-list file")->required();
    all_cmd->add_option("--alpha", all.alpha, "Idleness p/q; Lin-Lu-Yau curvature when omitted");
    all_cmd->add_option("--format", all.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    all_cmd->add_option("--path", all.path, "auto, transport or assignment")
        ->check(CLI::IsMember({"auto", "transport", "assignment"}));
    all_cmd->add_option("--threads", all.threads, "Worker threads")->check(CLI::PositiveNumber);
    all_cmd->add_flag("--fail-on-negative", all.fail_on_negative, "Exit 1 when any edge is negatively curved");

    IdlenessArgs idl;
    auto* idl_cmd = app.add_subcommand("idleness", "Breakpoints of alpha -> kappa_alpha for one edge");
    idl_cmd->add_option("--graph", idl.graph, "Edge-list file")->required();
    idl_cmd->add_option("--u", idl.u, "First endpoint")->required();
    idl_cmd->add_option("--v", idl.v, "Second endpoint")->required();
    idl_cmd->add_option("--out", idl.out, "Output file (stdout when omitted)");
    idl_cmd->add_option("--format", idl.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen_cmd->require_subcommand(1);
    gen_cmd->add_option("--out", gen.out, "Output file (stdout when omitted)");
    auto* gen_sharp = gen_cmd->add_subcommand("sharpness", "Sharpness construction on 3l+3 vertices");
    gen_sharp->add_option("--l", gen.l, "Construction parameter l >= 2")->required();
    auto* gen_cycle = gen_cmd->add_subcommand("cycle", "Cycle C_n");
    gen_cycle->add_option("--n", gen.n, "Vertex count")->required();
    auto* gen_complete = gen_cmd->add_subcommand("complete", "Complete graph K_n");
    gen_complete->add_option("--n", gen.n, "Vertex count")->required();
    auto* gen_path = gen_cmd->add_subcommand("path", "Path P_n");
    gen_path->add_option("--n", gen.n, "Vertex count")->required();
    auto* gen_cube = gen_cmd->add_subcommand("hypercube", "Hypercube Q_d");
    gen_cube->add_option("--d", gen.d, "Dimension")->required();
    auto* gen_petersen = gen_cmd->add_subcommand("petersen", "Petersen graph");
    auto* gen_random = gen_cmd->add_subcommand("random", "Random graph with a minimum degree");
    gen_random->add_option("--n", gen.n, "Vertex count")->required();
    gen_random->add_option("--delta", gen.delta, "Minimum degree")->required();
    gen_random->add_option("--seed", gen.seed, "Seed")->required();
    for (auto* sub : gen_cmd->get_subcommands()) sub->fallthrough();

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Check a statement on one instance");
    ver_cmd->require_subcommand(1);
    ver_cmd->add_option("--threads", ver.threads, "Worker threads")->check(CLI::PositiveNumber);
    auto* ver_threshold = ver_cmd->add_subcommand("threshold", "delta >= 2n/3 - 1 implies Ric >= 0");
    ver_threshold->add_option("--graph", ver.graph, "Edge-list file")->required();
    auto* ver_diameter = ver_cmd->add_subcommand("diameter", "delta >= (n-1)/2 implies diam <= 2");
    ver_diameter->add_option("--graph", ver.graph, "Edge-list file")->required();
    auto* ver_sharp = ver_cmd->add_subcommand("sharpness", "Sharpness construction for parameter l");
    ver_sharp->add_option("--l", ver.l, "Construction parameter l >= 2")->required();
    auto* ver_bound = ver_cmd->add_subcommand("proof-bound", "kappa >= (2|N_xy|+3)/max(d_x,d_y) - 1 when diam <= 2");
    ver_bound->add_option("--graph", ver.graph, "Edge-list file")->required();
    for (auto* sub : ver_cmd->get_subcommands()) sub->fallthrough();

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Random or exhaustive falsification sweep");
    sweep_cmd->add_option("--n-min", sw.n_min, "Smallest vertex count")->required();
    sweep_cmd->add_option("--n-max", sw.n_max, "Largest vertex count")->required();
    sweep_cmd->add_option("--samples", sw.samples, "Random samples (ignored when exhaustive)");
    sweep_cmd->add_option("--seed", sw.seed, "Seed (ignored when exhaustive)");
    sweep_cmd->add_option("--mode", sw.mode, "threshold, diameter, proof-bound or exhaustive")
        ->check(CLI::IsMember({"threshold", "diameter", "proof-bound", "proof_bound", "exhaustive"}));
    sweep_cmd->add_option("--threads", sw.threads, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << "ricci 1.0\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*edge_cmd) return cmd_edge(edge, out, err);
        if (*all_cmd) return cmd_all(all, out);
        if (*idl_cmd) return cmd_idleness(idl, out);
        if (*gen_cmd) {
            Graph g;
            if (*gen_sharp) g = generate_sharpness(gen.l).graph;
            else if (*gen_cycle) g = cycle_graph(gen.n);
            else if (*gen_complete) g = complete_graph(gen.n);
            else if (*gen_path) g = path_graph(gen.n);
            else if (*gen_cube) g = hypercube_graph(gen.d);
            else if (*gen_petersen) g = petersen_graph();
            else if (*gen_random) g = random_min_degree_graph(gen.n, gen.delta, gen.seed);
            write_output(gen.out, write_edge_list(g), out);
            return kExitOk;
        }
        if (*ver_cmd) {
            const CheckOptions opts{Route::transport, ver.threads};
            if (*ver_threshold) return emit_report(check_degree_threshold(load_graph(ver.graph), opts), out);
            if (*ver_diameter) return emit_report(check_diameter_lemma(load_graph(ver.graph)), out);
            if (*ver_sharp) return emit_report(check_sharpness(ver.l), out);
            if (*ver_bound) return emit_report(check_proof_bound_all(load_graph(ver.graph), opts), out);
        }
        if (*sweep_cmd) {
            std::vector<TheoremReport> reports;
            if (sw.mode == "exhaustive") {
                if (sw.n_min > sw.n_max) throw UsageError("--n-min exceeds --n-max");
                if (sw.n_max > 7) throw UsageError("exhaustive mode supports n <= 7");
                for (std::size_t n = std::max<std::size_t>(sw.n_min, 2); n <= sw.n_max; ++n) {
                    auto part = exhaustive_threshold(n, sw.threads);
                    reports.insert(reports.end(), part.begin(), part.end());
                }
            } else {
                reports = sweep_random({sw.n_min, sw.n_max, sw.samples, sw.seed, kModes.at(sw.mode), sw.threads});
            }
            std::size_t violations = 0;
            for (const auto& r : reports) {
                out << report_to_json(r).dump() << "\n";
                violations += r.violation() ? 1 : 0;
            }
            err << reports.size() << " reports, " << violations << " violations\n";
            return violations == 0 ? kExitOk : kExitFinding;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace ricci::cli

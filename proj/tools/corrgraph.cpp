// Command-line surface: curve sampling with CSV/SVG emission, transitivity
// reports, correlation validation, the K_5 non-closure certificate, witness
// verification and signed-game analysis.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "corrgraph/correlations.hpp"
#include "corrgraph/curves.hpp"
#include "corrgraph/games.hpp"
#include "corrgraph/graphs.hpp"
#include "corrgraph/operators.hpp"
#include "corrgraph/svg.hpp"

namespace {

using namespace corrgraph;

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned long long effective_seed(unsigned long long flag_seed) {
    if (const char* env = std::getenv("CORRGRAPH_SEED")) return std::stoull(env);
    return flag_seed;
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    auto c1 = spec.find(':');
    if (c1 != std::string::npos) {
        auto c2 = spec.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("grid spec must be start:step:stop or a comma list");
        double start = std::stod(spec.substr(0, c1));
        double step = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        double stop = std::stod(spec.substr(c2 + 1));
        if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
        for (int k = 0;; ++k) {
            double t = start + k * step;
            if (t > stop + 1e-12) break;
            grid.push_back(std::min(t, stop));
        }
        return grid;
    }
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) grid.push_back(std::stod(item));
    return grid;
}

std::vector<Rational> parse_rational_list(const std::string& spec) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

GameParameter parse_game_t(const std::string& text) {
    const std::string prefix = "irrational:";
    if (text.rfind(prefix, 0) == 0) return GameParameter::irrational(std::stod(text.substr(prefix.size())));
    if (text.find('.') != std::string::npos)
        throw std::invalid_argument(
            "decimal t needs the explicit 'irrational:' prefix; use p/q for exact rationals");
    return GameParameter::exact(Rational::parse(text));
}

void write_text(const std::string& path, const std::string& body) {
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << body;
}

int cmd_curves(const std::string& graph_spec, const std::string& grid_spec, bool fns, bool floc,
               bool fvect, bool fq, bool all, const std::string& csv_path,
               const std::string& svg_path, unsigned long long seed, int restarts, double tol) {
    Graph g = parse_graph_spec(graph_spec);
    auto grid = parse_grid(grid_spec);
    if (grid.empty()) throw std::invalid_argument("empty grid");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    std::set<CurveFn> which;
    if (all || fns) which.insert(CurveFn::ns);
    if (all || floc) which.insert(CurveFn::loc);
    if (all || fvect) which.insert(CurveFn::vect);
    if (all || fq) which.insert(CurveFn::q_upper);
    if (which.empty()) throw std::invalid_argument("select at least one of --fns/--floc/--fvect/--fq-upper/--all");

    CurveOptions opts;
    opts.seed = seed;
    opts.q_upper_restarts = restarts;
    opts.vect.s_tol = tol;
    CurveTable table = sample_curves(g, grid, which, opts);

    write_text(csv_path, curve_csv(table));
    if (!svg_path.empty()) write_text(svg_path, curve_svg(table));

    bool any_failed = false;
    for (const auto& [fn, st] : table.status)
        for (auto s : st)
            if (s == CellStatus::failed) any_failed = true;
    if (any_failed) {
        std::cerr << "corrgraph: some cells failed; see status columns\n";
        return kExitSolver;
    }
    return 0;
}

int cmd_certify_nonclosure(const std::string& t_list, const std::string& out_path,
                           const std::string& witness_dir, unsigned long long seed, int restarts) {
    auto ts = parse_rational_list(t_list);
    if (ts.empty()) throw std::invalid_argument("certify-nonclosure: empty t list");
    const Graph k5 = make_named("complete", 5);

    nlohmann::json cert;
    cert["graph"] = "complete:5";
    cert["seed"] = seed;
    cert["restarts"] = restarts;
    cert["tolerances"] = {{"gap", 1e-5}, {"sum_residual", 1e-6}};
    nlohmann::json points = nlohmann::json::array();

    bool complete_cert = true;
    double max_gap = 0.0;
    std::vector<double> tvals, values;
    for (const auto& t : ts) {
        const double tv = t.value();
        FqUpperOptions fopts;
        fopts.seed = seed;
        fopts.restarts = restarts;
        auto r = fq_upper(t, fopts);
        nlohmann::json pt;
        pt["t"] = t.str();
        pt["t_value"] = tv;
        pt["f_vect"] = f_vect_complete(5, tv);
        if (r.success) {
            pt["f_q_upper"] = r.value;
            double gap = std::abs(r.value - f_vect_complete(5, tv));
            pt["gap"] = gap;
            pt["via_clifford"] = r.via_clifford;
            pt["sum_residual"] = r.sum_residual;
            max_gap = std::max(max_gap, gap);
            if (!witness_dir.empty()) {
                std::string wpath = witness_dir + "/witness_t_" + std::to_string(t.num) + "_" +
                                    std::to_string(t.den) + ".json";
                write_witness(wpath, witness_to_json(r.family, 5.0 * tv, tv, seed, r.restarts_used));
                pt["witness"] = wpath;
            }
            tvals.push_back(tv);
            values.push_back(r.value);
        } else {
            pt["status"] = "search failed";
            complete_cert = false;
        }
        points.push_back(std::move(pt));
    }
    cert["points"] = std::move(points);

    // Non-linearity evidence: positive second differences over every equally
    // spaced triple of certified values.
    nlohmann::json diffs = nlohmann::json::array();
    bool strictly_convex = true;
    for (std::size_t i = 0; i < tvals.size(); ++i)
        for (std::size_t j = i + 1; j < tvals.size(); ++j)
            for (std::size_t k = j + 1; k < tvals.size(); ++k) {
                if (std::abs((tvals[j] - tvals[i]) - (tvals[k] - tvals[j])) > 1e-12) continue;
                double second = values[i] - 2.0 * values[j] + values[k];
                if (second <= 0.0) strictly_convex = false;
                diffs.push_back({{"t", {tvals[i], tvals[j], tvals[k]}},
                                 {"second_difference", second}});
            }
    cert["second_differences"] = std::move(diffs);
    cert["max_gap"] = max_gap;
    cert["complete"] = complete_cert;
    cert["certified"] = complete_cert && max_gap <= 1e-5 && strictly_convex;

    write_text(out_path, cert.dump(2) + "\n");
    if (!complete_cert) {
        std::cerr << "corrgraph: certificate incomplete (search failure)\n";
        return kExitSolver;
    }
    return 0;
}

int cmd_verify_witness(const std::string& path) {
    auto rep = verify_witness_file(path);
    nlohmann::json j;
    j["file"] = path;
    j["lambda"] = rep.lambda;
    j["t"] = rep.t;
    j["objective"] = rep.objective;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"residual", c.residual},
                          {"threshold", c.threshold}});
    j["checks"] = std::move(checks);
    j["all_pass"] = rep.all_pass;
    std::cout << j.dump(2) << "\n";
    return rep.all_pass ? 0 : kExitSolver;
}

int cmd_game(int n, const std::string& t_text, const std::string& json_path) {
    SignedGame game(n, parse_game_t(t_text));
    auto j = game_report_json(game);
    if (json_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text(json_path, j.dump(2) + "\n");
    return 0;
}

int cmd_check(const std::string& path, const std::string& graph_spec) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    nlohmann::json doc;
    in >> doc;
    SyncCorrelation p = correlation_from_json(doc);
    auto rep = validate(p);

    nlohmann::json j;
    j["file"] = path;
    j["n"] = p.input_count();
    j["nonneg"] = rep.nonneg;
    j["normalized"] = rep.normalized;
    j["nonsignalling"] = rep.nonsignalling;
    j["synchronous"] = rep.synchronous;
    j["max_residual"] = rep.max_residual;
    j["all_pass"] = rep.all();
    if (!graph_spec.empty()) {
        Graph g = parse_graph_spec(graph_spec);
        j["graph"] = g.name();
        j["F"] = F_objective(p, g);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_graph_info(const std::string& graph_spec) {
    Graph g = parse_graph_spec(graph_spec);
    nlohmann::json j;
    j["name"] = g.name();
    j["n"] = g.vertex_count();
    j["edge_count_ordered"] = g.edge_count();
    j["edge_count_undirected"] = g.edge_count() / 2;
    auto auts = automorphisms(g);
    j["automorphism_count"] = auts.size();
    j["vertex_transitive"] = is_vertex_transitive(g);
    j["edge_transitive"] = is_edge_transitive(g);
    j["fractional_chromatic"] = fractional_chromatic(g);
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph correlation functions and non-closure certificates"};
    app.require_subcommand(1);

    std::string graph_spec = "complete:5";
    std::string grid_spec = "0:0.05:1";
    bool fns = false, floc = false, fvect = false, fq = false, all = false;
    std::string csv_path = "-", svg_path;
    unsigned long long seed = 12345;
    int restarts = 50;
    double tol = 1e-8;

    auto* curves = app.add_subcommand("curves", "sample correlation-function curves");
    curves->add_option("--graph", graph_spec, "complete:N, cycle:N, petersen or edge-list path");
    curves->add_option("--grid", grid_spec, "start:step:stop or comma list of t values");
    curves->add_flag("--fns", fns, "nonsignalling optimum");
    curves->add_flag("--floc", floc, "classical optimum (LP)");
    curves->add_flag("--fvect", fvect, "vectorial optimum");
    curves->add_flag("--fq-upper", fq, "certified quantum upper bound (K_5, rational t)");
    curves->add_flag("--all", all, "all functions");
    curves->add_option("--csv", csv_path, "CSV output path, '-' for stdout");
    curves->add_option("--svg", svg_path, "SVG plot output path");
    curves->add_option("--seed", seed, "search seed (CORRGRAPH_SEED overrides)");
    curves->add_option("--restarts", restarts, "search restarts for --fq-upper");
    curves->add_option("--tol", tol, "bisection tolerance on s for --fvect");

    std::string t_list = "3/10,2/5,1/2,3/5,7/10";
    std::string cert_out = "-";
    std::string witness_dir;
    auto* certify = app.add_subcommand("certify-nonclosure",
                                       "rational-grid certificate that the K_5 quantum curve is "
                                       "strictly convex");
    certify->add_option("--t-list", t_list, "comma list of rational marginals p/q");
    certify->add_option("--out", cert_out, "certificate JSON path, '-' for stdout");
    certify->add_option("--witness-dir", witness_dir, "directory for witness JSON files");
    certify->add_option("--seed", seed, "search seed (CORRGRAPH_SEED overrides)");
    certify->add_option("--restarts", restarts, "search restarts per marginal");

    std::string witness_path;
    auto* verify = app.add_subcommand("verify-witness", "re-check a witness file");
    verify->add_option("path", witness_path, "witness JSON file")->required();

    int game_n = 5;
    std::string game_t = "1/2";
    std::string game_json;
    auto* game = app.add_subcommand("game", "signed-game analysis");
    game->add_option("--n", game_n, "number of inputs (>= 5)");
    game->add_option("--t", game_t, "marginal: p/q exact, or irrational:<decimal>");
    game->add_option("--json", game_json, "report path (default stdout)");

    std::string check_path, check_graph;
    auto* check = app.add_subcommand("check", "validate a correlation JSON file");
    check->add_option("path", check_path, "correlation JSON file")->required();
    check->add_option("--graph", check_graph, "optional graph for the F objective");

    std::string info_graph;
    auto* info = app.add_subcommand("graph-info", "graph invariants and transitivity report");
    info->add_option("--graph", info_graph, "graph spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        seed = effective_seed(seed);
        if (curves->parsed())
            return cmd_curves(graph_spec, grid_spec, fns, floc, fvect, fq, all, csv_path, svg_path,
                              seed, restarts, tol);
        if (certify->parsed()) return cmd_certify_nonclosure(t_list, cert_out, witness_dir, seed, restarts);
        if (verify->parsed()) return cmd_verify_witness(witness_path);
        if (game->parsed()) return cmd_game(game_n, game_t, game_json);
        if (check->parsed()) return cmd_check(check_path, check_graph);
        if (info->parsed()) return cmd_graph_info(info_graph);
    } catch (const SolverFailure& e) {
        std::cerr << "corrgraph: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "corrgraph: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

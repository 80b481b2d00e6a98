#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corrgraph/graphs.hpp"
#include "corrgraph/numerics.hpp"
#include "corrgraph/operators.hpp"

namespace corrgraph {

// Nonsignalling optimum: max{0, |E|(2t-1)}, exactly.
double f_ns(const Graph& g, double t);

// Classical optimum via the LP over atom weights of the algebra generated by
// the vertex events: full 2^n-atom LP for general graphs (n <= 12), or the
// orbit-collapsed two-constraint LP when the graph is vertex-transitive.
double f_loc(const Graph& g, double t);

// Fractional chromatic number by the covering LP over independent sets; its
// optimum equals 1 / sup{t : f_loc(t) = 0}.
double fractional_chromatic(const Graph& g);

// Vectorial optimum of the complete graph K_n, closed form:
// 0 on [0,1/n], nt(nt-1) on [1/n,(n-1)/n], (n^2-n)(2t-1) on [(n-1)/n,1].
double f_vect_complete(int n, double t);

// Lower/upper admissible values of s at marginal t:
// (max{0,2t-1} |E|, t |E|).
std::pair<double, double> ns_s_bounds(double t, int edge_count);

struct FvectOptions {
    double s_tol = 1e-8;      // absolute bisection tolerance on s
    double inner_tol = 1e-9;  // Dykstra feasibility residual
    int max_iter = 50000;     // Dykstra iteration cap
};

struct FvectSdpResult {
    bool ok = false;
    double value = 0.0;
    SymMatrix witness;  // (n+1) x (n+1) completion at the returned s
};

// Vectorial optimum of a vertex- and edge-transitive graph: the smallest s
// admitting an (n+1)x(n+1) PSD matrix with corner 1, border and diagonal t,
// edge entries s/|E| and all entries nonnegative. Bisection on s with
// Dykstra's projections as the feasibility oracle; the oracle itself runs on
// the one-step Cholesky reduction of the completion (equivalent by the Schur
// complement, and better conditioned).
FvectSdpResult f_vect_sdp(const Graph& g, double t, const FvectOptions& opts = {});

// f_vect with the closed form taken for complete graphs and the SDP path for
// every other vertex- and edge-transitive graph. Non-transitive graphs are
// rejected.
double f_vect(const Graph& g, double t, double tol = 1e-8);

enum class CurveFn { ns, loc, vect, q_upper };
enum class CellStatus { ok, skipped, failed };

std::string to_string(CurveFn fn);
std::string to_string(CellStatus st);

struct CurveTable {
    std::string graph_name;
    int n = 0;
    int edge_count = 0;
    std::vector<double> grid;
    std::map<CurveFn, std::vector<double>> values;      // NaN where not computed
    std::map<CurveFn, std::vector<CellStatus>> status;
    bool ordering_ok = true;             // f_loc >= f_q_upper >= f_vect >= f_ns post-check
    double worst_ordering_violation = 0.0;
};

struct CurveOptions {
    FvectOptions vect;
    int q_upper_restarts = 50;
    unsigned long long seed = 12345;
};

// Samples the requested functions over the grid. Solver failures are recorded
// per cell, never thrown; the hierarchy ordering is enforced as a post-check
// and reported on the table.
CurveTable sample_curves(const Graph& g, const std::vector<double>& grid,
                         const std::set<CurveFn>& which, const CurveOptions& opts = {});

// Max over gridpoints of |f(1-t) - |E|(1-2t) - f(t)|. The grid must be
// symmetric about 1/2.
double symmetry_check(const CurveTable& table, CurveFn fn);

struct ConvexityReport {
    bool convex = true;
    double worst_violation = 0.0;  // worst chord-test excess over consecutive triples
};

ConvexityReport convexity_check(const CurveTable& table, CurveFn fn, double tol = 1e-9);

// CSV with columns t, f_ns, f_loc, f_vect, f_q_upper, status_*; one row per
// gridpoint, deterministic ordering and formatting.
std::string curve_csv(const CurveTable& table);

}  // namespace corrgraph

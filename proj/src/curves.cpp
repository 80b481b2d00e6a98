#include "corrgraph/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace corrgraph {

double f_ns(const Graph& g, double t) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("f_ns: t must lie in [0,1]");
    return std::max(0.0, g.edge_count() * (2.0 * t - 1.0));
}

namespace {

int popcount(unsigned mask) { return __builtin_popcount(mask); }

// Ordered edge count inside the vertex subset encoded by mask.
int edges_inside(const Graph& g, unsigned mask) {
    int count = 0;
    for (auto [v, w] : g.edges())
        if ((mask >> v & 1u) && (mask >> w & 1u)) ++count;
    return count;
}

// Full LP over the 2^n atom weights: minimize the edge mass subject to total
// mass 1 and per-vertex marginal t.
double f_loc_full(const Graph& g, double t) {
    const int n = g.vertex_count();
    const unsigned atoms = 1u << n;
    LinearProgram lp;
    lp.num_vars = static_cast<int>(atoms);
    lp.objective.resize(atoms);
    for (unsigned mask = 0; mask < atoms; ++mask)
        lp.objective[mask] = static_cast<double>(edges_inside(g, mask));
    lp.eq_rows.assign(n + 1, std::vector<double>(atoms, 0.0));
    lp.eq_rhs.assign(n + 1, 0.0);
    for (unsigned mask = 0; mask < atoms; ++mask) {
        lp.eq_rows[0][mask] = 1.0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) lp.eq_rows[v + 1][mask] = 1.0;
    }
    lp.eq_rhs[0] = 1.0;
    for (int v = 0; v < n; ++v) lp.eq_rhs[v + 1] = t;
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("f_loc: atom LP unexpectedly " +
                                 std::string(sol.status == LpStatus::infeasible ? "infeasible" : "unbounded"));
    return sol.value;
}

// Vertex-transitive collapse: an optimal atom measure may be averaged over
// Aut(G), so only the pair (|S|, edges inside S) of an atom matters. The LP
// then has one column per distinct pair and two rows.
double f_loc_reduced(const Graph& g, double t) {
    const int n = g.vertex_count();
    const unsigned atoms = 1u << n;
    std::set<std::pair<int, int>> cols;
    for (unsigned mask = 0; mask < atoms; ++mask)
        cols.insert({popcount(mask), edges_inside(g, mask)});
    LinearProgram lp;
    lp.num_vars = static_cast<int>(cols.size());
    lp.eq_rows.assign(2, std::vector<double>(lp.num_vars, 0.0));
    lp.eq_rhs = {1.0, n * t};
    int c = 0;
    for (auto [k, e] : cols) {
        lp.objective.push_back(static_cast<double>(e));
        lp.eq_rows[0][c] = 1.0;
        lp.eq_rows[1][c] = static_cast<double>(k);
        ++c;
    }
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::optimal) throw std::runtime_error("f_loc: reduced LP failed");
    return sol.value;
}

bool vertex_transitive_or_false(const Graph& g) {
    try {
        return is_vertex_transitive(g);
    } catch (const std::exception&) {
        return false;  // group too large to enumerate; fall back to the full LP
    }
}

}  // namespace

double f_loc(const Graph& g, double t) {
    if (g.vertex_count() > 12) throw std::invalid_argument("f_loc: n > 12 unsupported");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("f_loc: t must lie in [0,1]");
    if (vertex_transitive_or_false(g)) return f_loc_reduced(g, t);
    return f_loc_full(g, t);
}

double fractional_chromatic(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("fractional_chromatic: n > 12 unsupported");
    std::vector<unsigned> indep;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (edges_inside(g, mask) == 0) indep.push_back(mask);

    // Covering LP: minimize sum x_I with sum_{I containing v} x_I >= 1.
    const int m = static_cast<int>(indep.size());
    LinearProgram lp;
    lp.num_vars = m + n;  // independent-set weights plus surplus variables
    lp.objective.assign(lp.num_vars, 0.0);
    for (int c = 0; c < m; ++c) lp.objective[c] = 1.0;
    lp.eq_rows.assign(n, std::vector<double>(lp.num_vars, 0.0));
    lp.eq_rhs.assign(n, 1.0);
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < m; ++c)
            if (indep[c] >> v & 1u) lp.eq_rows[v][c] = 1.0;
        lp.eq_rows[v][m + v] = -1.0;
    }
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("fractional_chromatic: covering LP failed");
    return sol.value;
}

double f_vect_complete(int n, double t) {
    if (n < 3) throw std::invalid_argument("f_vect_complete: need n >= 3");
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("f_vect_complete: t must lie in [0,1]");
    const double nd = static_cast<double>(n);
    if (t <= 1.0 / nd) return 0.0;
    if (t <= (nd - 1.0) / nd) return nd * t * (nd * t - 1.0);
    return (nd * nd - nd) * (2.0 * t - 1.0);
}

std::pair<double, double> ns_s_bounds(double t, int edge_count) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("ns_s_bounds: t must lie in [0,1]");
    return {std::max(0.0, 2.0 * t - 1.0) * edge_count, t * edge_count};
}

namespace {

// Feasibility instance for the Schur reduction of the bordered completion:
// an n x n matrix with diagonal t(1-t), edge entries a = s/|E| - t^2, free
// entries bounded below by -t^2 (entrywise nonnegativity of the completion),
// intersected with the PSD cone.
FeasibilityProblem reduced_problem(const Graph& g, double t, double a) {
    const int n = g.vertex_count();
    FeasibilityProblem prob;
    prob.dim = n;
    const double diag = t * (1.0 - t);
    for (int v = 0; v < n; ++v) prob.fixed.push_back({v, v, diag});
    for (auto [v, w] : g.undirected_edges()) prob.fixed.push_back({v, w, a});
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (!g.adjacent(v, w)) prob.lower_bounds.push_back({v, w, -(t * t)});
    return prob;
}

SymMatrix reduced_start(const FeasibilityProblem& prob) {
    SymMatrix x(prob.dim);
    for (const auto& f : prob.fixed) x.set(f.i, f.j, f.value);
    return x;
}

SymMatrix lift_completion(const Graph& g, double t, const SymMatrix& q) {
    const int n = g.vertex_count();
    SymMatrix p(n + 1);
    p.set(0, 0, 1.0);
    for (int v = 0; v < n; ++v) {
        p.set(0, v + 1, t);
        for (int w = 0; w <= v; ++w) p.set(v + 1, w + 1, q(v, w) + t * t);
    }
    return p;
}

}  // namespace

FvectSdpResult f_vect_sdp(const Graph& g, double t, const FvectOptions& opts) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("f_vect_sdp: t must lie in [0,1]");
    if (!is_vertex_transitive(g) || !is_edge_transitive(g))
        throw std::invalid_argument("f_vect_sdp: graph must be vertex- and edge-transitive");
    const int E = g.edge_count();

    auto oracle = [&](double a) {
        auto prob = reduced_problem(g, t, a);
        return dykstra_feasible(prob, reduced_start(prob), opts.inner_tol, opts.max_iter);
    };

    // Bracket in the edge-entry coordinate a = s/|E| - t^2.
    double a_lo = std::max(0.0, 2.0 * t - 1.0) - t * t;
    double a_hi = t * (1.0 - t);
    FvectSdpResult res;

    auto lo_check = oracle(a_lo);
    if (lo_check.feasible) {
        res.ok = true;
        res.value = (a_lo + t * t) * E;
        res.witness = lift_completion(g, t, lo_check.witness);
        return res;
    }
    auto hi_check = oracle(a_hi);
    if (!hi_check.feasible) return res;  // the pinned upper endpoint must be feasible

    SymMatrix best_witness = hi_check.witness;
    const double a_tol = opts.s_tol / E;
    while (a_hi - a_lo > a_tol) {
        double mid = 0.5 * (a_lo + a_hi);
        auto r = oracle(mid);
        if (r.feasible) {
            a_hi = mid;
            best_witness = r.witness;
        } else {
            a_lo = mid;
        }
    }
    res.ok = true;
    res.value = (a_hi + t * t) * E;
    res.witness = lift_completion(g, t, best_witness);
    return res;
}

double f_vect(const Graph& g, double t, double tol) {
    const int n = g.vertex_count();
    bool complete = g.edge_count() == n * (n - 1);
    if (complete) return f_vect_complete(n, t);
    FvectOptions opts;
    opts.s_tol = tol;
    auto res = f_vect_sdp(g, t, opts);
    if (!res.ok) throw std::runtime_error("f_vect: bisection oracle failed");
    return res.value;
}

std::string to_string(CurveFn fn) {
    switch (fn) {
        case CurveFn::ns: return "f_ns";
        case CurveFn::loc: return "f_loc";
        case CurveFn::vect: return "f_vect";
        case CurveFn::q_upper: return "f_q_upper";
    }
    return "?";
}

std::string to_string(CellStatus st) {
    switch (st) {
        case CellStatus::ok: return "ok";
        case CellStatus::skipped: return "skipped";
        case CellStatus::failed: return "failed";
    }
    return "?";
}

namespace {

// Snaps a gridpoint to a rational with denominator <= 20 when one is within
// rounding distance; the certified upper-bound path is rational-only.
std::optional<Rational> snap_rational(double t, long long max_den = 20) {
    for (long long q = 1; q <= max_den; ++q) {
        double scaled = t * static_cast<double>(q);
        long long p = std::llround(scaled);
        if (std::abs(scaled - static_cast<double>(p)) < 1e-9 * q) return Rational(p, q);
    }
    return std::nullopt;
}

}  // namespace

CurveTable sample_curves(const Graph& g, const std::vector<double>& grid,
                         const std::set<CurveFn>& which, const CurveOptions& opts) {
    for (double t : grid)
        if (t < 0.0 || t > 1.0) throw std::invalid_argument("sample_curves: grid point outside [0,1]");
    CurveTable table;
    table.graph_name = g.name();
    table.n = g.vertex_count();
    table.edge_count = g.edge_count();
    table.grid = grid;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (CurveFn fn : which) {
        table.values[fn].assign(grid.size(), nan);
        table.status[fn].assign(grid.size(), CellStatus::skipped);
    }

    const int n = g.vertex_count();
    const bool complete = g.edge_count() == n * (n - 1);
    const bool is_k5 = complete && n == 5;

    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const double t = grid[idx];
        for (CurveFn fn : which) {
            try {
                switch (fn) {
                    case CurveFn::ns:
                        table.values[fn][idx] = f_ns(g, t);
                        table.status[fn][idx] = CellStatus::ok;
                        break;
                    case CurveFn::loc:
                        table.values[fn][idx] = f_loc(g, t);
                        table.status[fn][idx] = CellStatus::ok;
                        break;
                    case CurveFn::vect:
                        if (complete) {
                            table.values[fn][idx] = f_vect_complete(n, t);
                        } else {
                            auto r = f_vect_sdp(g, t, opts.vect);
                            if (!r.ok) {
                                table.status[fn][idx] = CellStatus::failed;
                                break;
                            }
                            table.values[fn][idx] = r.value;
                        }
                        table.status[fn][idx] = CellStatus::ok;
                        break;
                    case CurveFn::q_upper: {
                        if (!is_k5) break;  // certified path covers K_5 only
                        auto rat = snap_rational(t);
                        if (!rat || rat->value() < kMarginalIntervalLo - 1e-12 ||
                            rat->value() > kMarginalIntervalHi + 1e-12)
                            break;
                        FqUpperOptions fopts;
                        fopts.restarts = opts.q_upper_restarts;
                        fopts.seed = opts.seed;
                        auto r = fq_upper(*rat, fopts);
                        if (!r.success) {
                            table.status[fn][idx] = CellStatus::failed;
                            break;
                        }
                        table.values[fn][idx] = r.value;
                        table.status[fn][idx] = CellStatus::ok;
                        break;
                    }
                }
            } catch (const std::exception&) {
                table.status[fn][idx] = CellStatus::failed;
            }
        }
    }

    // Hierarchy post-check over computed cells; tolerances reflect how tight
    // each pair of quantities is.
    auto value_at = [&](CurveFn fn, std::size_t idx) -> std::optional<double> {
        auto it = table.values.find(fn);
        if (it == table.values.end()) return std::nullopt;
        if (table.status.at(fn)[idx] != CellStatus::ok) return std::nullopt;
        return it->second[idx];
    };
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        auto flag = [&](double gap) {
            if (gap > 0.0) {
                table.ordering_ok = false;
                table.worst_ordering_violation = std::max(table.worst_ordering_violation, gap);
            }
        };
        auto check = [&](CurveFn hi, CurveFn lo, double tol) {
            auto a = value_at(hi, idx), b = value_at(lo, idx);
            if (a && b) flag(*b - *a - tol);
        };
        check(CurveFn::loc, CurveFn::q_upper, 1e-4);
        check(CurveFn::q_upper, CurveFn::vect, 1e-4);
        check(CurveFn::loc, CurveFn::vect, 1e-6);
        check(CurveFn::vect, CurveFn::ns, 1e-6);
        check(CurveFn::loc, CurveFn::ns, 1e-6);
        // every value sits inside [0, |E| t]
        for (CurveFn fn : which)
            if (auto v = value_at(fn, idx)) {
                flag(-*v - 1e-9);
                flag(*v - table.edge_count * grid[idx] - 1e-6);
            }
    }
    return table;
}

double symmetry_check(const CurveTable& table, CurveFn fn) {
    const auto it = table.values.find(fn);
    if (it == table.values.end()) throw std::invalid_argument("symmetry_check: function not sampled");
    const auto& grid = table.grid;
    const std::size_t m = grid.size();
    for (std::size_t i = 0; i < m; ++i)
        if (std::abs(grid[i] + grid[m - 1 - i] - 1.0) > 1e-12)
            throw std::invalid_argument("symmetry_check: grid is not symmetric about 1/2");
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double t = grid[i];
        double f_t = it->second[i];
        double f_mirror = it->second[m - 1 - i];
        if (std::isnan(f_t) || std::isnan(f_mirror)) continue;
        worst = std::max(worst, std::abs(f_mirror - table.edge_count * (1.0 - 2.0 * t) - f_t));
    }
    return worst;
}

ConvexityReport convexity_check(const CurveTable& table, CurveFn fn, double tol) {
    const auto it = table.values.find(fn);
    if (it == table.values.end()) throw std::invalid_argument("convexity_check: function not sampled");
    if (table.grid.size() < 3) throw std::invalid_argument("convexity_check: need at least 3 gridpoints");
    ConvexityReport rep;
    for (std::size_t i = 1; i + 1 < table.grid.size(); ++i) {
        double a = table.grid[i - 1], b = table.grid[i], c = table.grid[i + 1];
        double fa = it->second[i - 1], fb = it->second[i], fc = it->second[i + 1];
        if (std::isnan(fa) || std::isnan(fb) || std::isnan(fc)) continue;
        double chord = fa + (fc - fa) * (b - a) / (c - a);
        double excess = fb - chord;
        if (excess > rep.worst_violation) rep.worst_violation = excess;
        if (excess > tol) rep.convex = false;
    }
    return rep;
}

std::string curve_csv(const CurveTable& table) {
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    const CurveFn order[] = {CurveFn::ns, CurveFn::loc, CurveFn::vect, CurveFn::q_upper};
    std::string out = "t,f_ns,f_loc,f_vect,f_q_upper,status_ns,status_loc,status_vect,status_q_upper\n";
    for (std::size_t idx = 0; idx < table.grid.size(); ++idx) {
        out += fmt(table.grid[idx]);
        for (CurveFn fn : order) {
            out += ',';
            auto it = table.values.find(fn);
            if (it != table.values.end() && !std::isnan(it->second[idx])) out += fmt(it->second[idx]);
        }
        for (CurveFn fn : order) {
            out += ',';
            auto it = table.status.find(fn);
            if (it != table.status.end()) out += to_string(it->second[idx]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace corrgraph

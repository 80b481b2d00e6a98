#include "corrgraph/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace corrgraph {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("SymMatrix: dimension must be positive");
    tri_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[i]);
    return m;
}

std::size_t SymMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::out_of_range("SymMatrix: index out of range");
    if (i < j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            double v = (*this)(i, j);
            sum += v * v;
        }
    return std::sqrt(sum);
}

bool SymMatrix::all_finite() const {
    return std::all_of(tri_.begin(), tri_.end(), [](double v) { return std::isfinite(v); });
}

void SymMatrix::axpy(double alpha, const SymMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("SymMatrix::axpy: dimension mismatch");
    for (std::size_t k = 0; k < tri_.size(); ++k) tri_[k] += alpha * other.tri_[k];
}

void SymMatrix::scale(double alpha) {
    for (double& v : tri_) v *= alpha;
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("frobenius_distance: dimension mismatch");
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            double d = a(i, j) - b(i, j);
            sum += d * d;
        }
    return std::sqrt(sum);
}

EigenDecomposition jacobi_eigen(const SymMatrix& s, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("jacobi_eigen: tol must be positive");
    if (!s.all_finite()) throw std::invalid_argument("jacobi_eigen: matrix has non-finite entries");
    const int n = s.dim();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i) * n + i] = 1.0;
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = s(i, j);
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto vat = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

    const double fro = s.frobenius_norm();
    auto off_norm = [&]() {
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) sum += 2.0 * at(i, j) * at(i, j);
        return std::sqrt(sum);
    };

    const int max_sweeps = 100;
    int sweep = 0;
    if (fro > 0.0) {
        for (; sweep < max_sweeps; ++sweep) {
            if (off_norm() <= tol * fro) break;
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    double apq = at(p, q);
                    if (std::abs(apq) <= tol * fro / (static_cast<double>(n) * n)) continue;
                    double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                    double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    double c = 1.0 / std::sqrt(1.0 + t * t);
                    double sn = t * c;
                    double app = at(p, p), aqq = at(q, q);
                    at(p, p) = app - t * apq;
                    at(q, q) = aqq + t * apq;
                    at(p, q) = at(q, p) = 0.0;
                    for (int r = 0; r < n; ++r) {
                        if (r == p || r == q) continue;
                        double arp = at(r, p), arq = at(r, q);
                        at(r, p) = at(p, r) = c * arp - sn * arq;
                        at(r, q) = at(q, r) = sn * arp + c * arq;
                    }
                    for (int r = 0; r < n; ++r) {
                        double vrp = vat(r, p), vrq = vat(r, q);
                        vat(r, p) = c * vrp - sn * vrq;
                        vat(r, q) = sn * vrp + c * vrq;
                    }
                }
            }
        }
        if (sweep == max_sweeps && off_norm() > tol * fro)
            throw std::runtime_error("jacobi_eigen: no convergence within sweep cap");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return at(x, x) < at(y, y); });

    EigenDecomposition dec;
    dec.dim = n;
    dec.values.resize(n);
    dec.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        dec.values[k] = at(order[k], order[k]);
        for (int i = 0; i < n; ++i) dec.vectors[static_cast<std::size_t>(k) * n + i] = vat(i, order[k]);
    }
    return dec;
}

double min_eigenvalue(const SymMatrix& s) { return jacobi_eigen(s).values.front(); }

bool is_psd(const SymMatrix& s, double tol) { return min_eigenvalue(s) >= -tol; }

SymMatrix cholesky_reduce(const SymMatrix& p) {
    if (p.dim() < 2) throw std::invalid_argument("cholesky_reduce: need dim >= 2");
    const double pivot = p(0, 0);
    if (!(pivot > 0.0)) throw std::invalid_argument("cholesky_reduce: p(0,0) must be positive");
    const int m = p.dim() - 1;
    SymMatrix q(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= i; ++j)
            q.set(i, j, p(i + 1, j + 1) - p(0, i + 1) * p(0, j + 1) / pivot);
    return q;
}

SymMatrix project_psd(const SymMatrix& s) {
    auto dec = jacobi_eigen(s);
    const int n = s.dim();
    SymMatrix out(n);
    for (int k = 0; k < n; ++k) {
        double lam = dec.values[k];
        if (lam <= 0.0) continue;
        for (int i = 0; i < n; ++i) {
            double vik = dec.vector_entry(i, k);
            for (int j = 0; j <= i; ++j) out.add(i, j, lam * vik * dec.vector_entry(j, k));
        }
    }
    return out;
}

std::vector<std::vector<double>> gram_vectors(const SymMatrix& s, double cutoff) {
    auto dec = jacobi_eigen(s);
    const int n = s.dim();
    double max_eig = dec.values.empty() ? 0.0 : dec.values.back();
    std::vector<int> keep;
    for (int k = 0; k < n; ++k)
        if (dec.values[k] > cutoff * std::max(max_eig, 1.0)) keep.push_back(k);
    std::vector<std::vector<double>> rows(n, std::vector<double>(keep.size(), 0.0));
    for (std::size_t c = 0; c < keep.size(); ++c) {
        double root = std::sqrt(dec.values[keep[c]]);
        for (int i = 0; i < n; ++i) rows[i][c] = root * dec.vector_entry(i, keep[c]);
    }
    return rows;
}

namespace {

struct EntryMap {
    // Full-matrix masks/values folded from the symmetric constraint lists.
    int dim;
    std::vector<char> is_fixed;      // dim*dim
    std::vector<double> fixed_value;
    std::vector<char> has_bound;
    std::vector<double> bound_value;
    int distinct_fixed = 0;  // count over i <= j

    explicit EntryMap(const FeasibilityProblem& prob) : dim(prob.dim) {
        std::size_t nn = static_cast<std::size_t>(dim) * dim;
        is_fixed.assign(nn, 0);
        fixed_value.assign(nn, 0.0);
        has_bound.assign(nn, 0);
        bound_value.assign(nn, 0.0);
        for (const auto& f : prob.fixed) {
            check_index(f.i, f.j);
            place_fixed(f.i, f.j, f.value);
            place_fixed(f.j, f.i, f.value);
        }
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j <= i; ++j)
                if (is_fixed[flat(i, j)]) ++distinct_fixed;
        for (const auto& b : prob.lower_bounds) {
            check_index(b.i, b.j);
            place_bound(b.i, b.j, b.lower);
            place_bound(b.j, b.i, b.lower);
        }
    }

    std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i) * dim + j; }

    void check_index(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim || j >= dim)
            throw std::invalid_argument("dykstra_feasible: constraint index out of range");
    }

    void place_fixed(int i, int j, double value) {
        auto k = flat(i, j);
        if (is_fixed[k] && fixed_value[k] != value)
            throw std::invalid_argument("dykstra_feasible: contradictory fixed entries");
        is_fixed[k] = 1;
        fixed_value[k] = value;
    }

    void place_bound(int i, int j, double lower) {
        auto k = flat(i, j);
        if (has_bound[k])
            bound_value[k] = std::max(bound_value[k], lower);
        else {
            has_bound[k] = 1;
            bound_value[k] = lower;
        }
    }

    void apply_fixed(SymMatrix& x) const {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j <= i; ++j)
                if (is_fixed[flat(i, j)]) x.set(i, j, fixed_value[flat(i, j)]);
    }

    void clip_bounds(SymMatrix& x) const {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j <= i; ++j)
                if (has_bound[flat(i, j)] && x(i, j) < bound_value[flat(i, j)])
                    x.set(i, j, bound_value[flat(i, j)]);
    }

    double bound_violation(const SymMatrix& x) const {
        double worst = 0.0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j <= i; ++j)
                if (has_bound[flat(i, j)])
                    worst = std::max(worst, bound_value[flat(i, j)] - x(i, j));
        return worst;
    }
};

}  // namespace

FeasibilityResult dykstra_feasible(const FeasibilityProblem& prob, const SymMatrix& start,
                                   double tol, int max_iter) {
    if (prob.dim != start.dim())
        throw std::invalid_argument("dykstra_feasible: start dimension mismatch");
    if (tol <= 0.0) throw std::invalid_argument("dykstra_feasible: tol must be positive");
    EntryMap map(prob);
    const int n = prob.dim;

    auto violation_of = [&](const SymMatrix& w) {
        return std::max(map.bound_violation(w), std::max(0.0, -min_eigenvalue(w)));
    };

    // Fully pinned affine set: a single candidate decides the instance.
    if (map.distinct_fixed == n * (n + 1) / 2) {
        SymMatrix w(n);
        map.apply_fixed(w);
        double viol = violation_of(w);
        return {viol <= tol, w, 1, viol};
    }

    SymMatrix x = start;
    SymMatrix corr_bounds(n), corr_psd(n);
    double prev_window_disp = std::numeric_limits<double>::infinity();
    double disp = std::numeric_limits<double>::infinity();
    const int window = 256;

    for (int it = 0; it < max_iter; ++it) {
        map.apply_fixed(x);
        SymMatrix xa = x;

        x.axpy(1.0, corr_bounds);
        SymMatrix before = x;
        map.clip_bounds(x);
        corr_bounds = before;
        corr_bounds.axpy(-1.0, x);

        x.axpy(1.0, corr_psd);
        before = x;
        x = project_psd(x);
        corr_psd = before;
        corr_psd.axpy(-1.0, x);

        disp = frobenius_distance(xa, x);
        if (disp <= 10.0 * tol || it % 64 == 0) {
            SymMatrix w = x;
            map.apply_fixed(w);
            double viol = violation_of(w);
            if (viol <= tol) return {true, w, it + 1, viol};
        }
        if (it > 0 && it % window == 0) {
            // Stalled displacement well above tol: treat as infeasible at
            // tolerance rather than burning the full iteration budget.
            if (disp > 0.995 * prev_window_disp && disp > 100.0 * tol) {
                SymMatrix w = x;
                map.apply_fixed(w);
                return {false, w, it + 1, violation_of(w)};
            }
            prev_window_disp = disp;
        }
    }
    SymMatrix w = x;
    map.apply_fixed(w);
    double viol = violation_of(w);
    return {viol <= tol, w, max_iter, viol};
}

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kPhase1Eps = 1e-8;

struct Tableau {
    int rows = 0, cols = 0;  // constraint rows, structural+artificial columns
    std::vector<std::vector<double>> t;  // rows x (cols+1); last column is rhs
    std::vector<double> cost;            // reduced-cost row, size cols+1 (last = -objective)
    std::vector<int> basis;              // basis variable per row

    void pivot(int r, int c) {
        double inv = 1.0 / t[r][c];
        for (double& v : t[r]) v *= inv;
        t[r][c] = 1.0;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            double f = t[i][c];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
            t[i][c] = 0.0;
        }
        double f = cost[c];
        if (f != 0.0) {
            for (int j = 0; j <= cols; ++j) cost[j] -= f * t[r][j];
            cost[c] = 0.0;
        }
        basis[r] = c;
    }

    enum class Step { pivoted, optimal, unbounded };

    // Bland's rule: entering column of smallest index with negative reduced
    // cost; leaving row by minimum ratio, ties broken by smallest basis index.
    Step bland_step(int admissible_cols) {
        int enter = -1;
        for (int j = 0; j < admissible_cols; ++j)
            if (cost[j] < -kPivotEps) {
                enter = j;
                break;
            }
        if (enter < 0) return Step::optimal;
        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < rows; ++i) {
            if (t[i][enter] <= kPivotEps) continue;
            double ratio = t[i][cols] / t[i][enter];
            if (leave < 0 || ratio < best_ratio - 1e-15 ||
                (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return Step::unbounded;
        pivot(leave, enter);
        return Step::pivoted;
    }

    Step run(int admissible_cols) {
        Step s;
        while ((s = bland_step(admissible_cols)) == Step::pivoted) {
        }
        return s;
    }
};

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.eq_rows.size());
    const int nv = lp.num_vars;
    if (static_cast<int>(lp.objective.size()) != nv)
        throw std::invalid_argument("simplex_solve: objective size mismatch");
    if (lp.eq_rhs.size() != lp.eq_rows.size())
        throw std::invalid_argument("simplex_solve: rhs size mismatch");
    for (const auto& row : lp.eq_rows)
        if (static_cast<int>(row.size()) != nv)
            throw std::invalid_argument("simplex_solve: row size mismatch");

    Tableau tb;
    tb.rows = m;
    tb.cols = nv + m;
    tb.t.assign(m, std::vector<double>(tb.cols + 1, 0.0));
    tb.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        double sgn = lp.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < nv; ++j) tb.t[i][j] = sgn * lp.eq_rows[i][j];
        tb.t[i][nv + i] = 1.0;
        tb.t[i][tb.cols] = sgn * lp.eq_rhs[i];
        tb.basis[i] = nv + i;
    }

    // Phase 1: minimize the sum of artificials.
    tb.cost.assign(tb.cols + 1, 0.0);
    for (int j = 0; j < nv; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += tb.t[i][j];
        tb.cost[j] = -s;
    }
    double rhs_sum = 0.0;
    for (int i = 0; i < m; ++i) rhs_sum += tb.t[i][tb.cols];
    tb.cost[tb.cols] = -rhs_sum;

    if (tb.run(nv) == Tableau::Step::unbounded)
        return {LpStatus::infeasible, 0.0, {}};  // phase 1 is bounded below by zero
    double phase1 = -tb.cost[tb.cols];
    if (phase1 > kPhase1Eps) return {LpStatus::infeasible, 0.0, {}};

    // Drive any artificial still in the basis out, or drop its (redundant) row.
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] < nv) continue;
        int piv = -1;
        for (int j = 0; j < nv; ++j)
            if (std::abs(tb.t[i][j]) > kPivotEps) {
                piv = j;
                break;
            }
        if (piv >= 0) tb.pivot(i, piv);
    }

    // Phase 2 over structural columns only.
    tb.cost.assign(tb.cols + 1, 0.0);
    for (int j = 0; j < nv; ++j) tb.cost[j] = lp.objective[j];
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] >= nv) continue;  // redundant zero row
        double cb = lp.objective[tb.basis[i]];
        if (cb == 0.0) continue;
        for (int j = 0; j <= tb.cols; ++j) tb.cost[j] -= cb * tb.t[i][j];
    }

    if (tb.run(nv) == Tableau::Step::unbounded) return {LpStatus::unbounded, 0.0, {}};

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.x.assign(nv, 0.0);
    for (int i = 0; i < m; ++i)
        if (tb.basis[i] < nv) sol.x[tb.basis[i]] = tb.t[i][tb.cols];
    sol.value = 0.0;
    for (int j = 0; j < nv; ++j) sol.value += lp.objective[j] * sol.x[j];
    return sol;
}

}  // namespace corrgraph

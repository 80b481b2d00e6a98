#pragma once

#include <vector>

namespace corrgraph {

// Default tolerance threaded through validators and PSD checks.
inline constexpr double kDefaultTol = 1e-9;

// Dense real symmetric matrix. Only the lower triangle is stored, so
// entry(i,j) == entry(j,i) holds exactly by construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int dim);
    static SymMatrix identity(int dim);
    static SymMatrix diagonal(const std::vector<double>& d);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return tri_[index(i, j)]; }
    void set(int i, int j, double value) { tri_[index(i, j)] = value; }
    void add(int i, int j, double value) { tri_[index(i, j)] += value; }

    double frobenius_norm() const;
    bool all_finite() const;

    // In-place this += alpha * other.
    void axpy(double alpha, const SymMatrix& other);
    void scale(double alpha);

private:
    std::size_t index(int i, int j) const;
    int dim_ = 0;
    std::vector<double> tri_;  // packed lower triangle, row-major
};

double frobenius_distance(const SymMatrix& a, const SymMatrix& b);

struct EigenDecomposition {
    int dim = 0;
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // column-major; vectors[j*dim + i] = V(i,j)

    double vector_entry(int i, int j) const { return vectors[static_cast<std::size_t>(j) * dim + i]; }
};

// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius mass is below
// tol * ||S||_F, which bounds the reconstruction error ||V diag(l) V^T - S||_F
// by the same quantity. Throws std::runtime_error if the sweep cap is hit.
EigenDecomposition jacobi_eigen(const SymMatrix& s, double tol = 1e-13);

double min_eigenvalue(const SymMatrix& s);
bool is_psd(const SymMatrix& s, double tol = kDefaultTol);

// One step of the Cholesky algorithm: the (dim-1) x (dim-1) Schur complement
// q(i,j) = p(i+1,j+1) - p(0,i+1) p(0,j+1) / p(0,0). Requires p(0,0) > 0;
// given that, P is PSD iff Q is PSD and the border is consistent.
SymMatrix cholesky_reduce(const SymMatrix& p);

// Nearest PSD matrix in Frobenius norm (eigenvalue clipping at zero).
SymMatrix project_psd(const SymMatrix& s);

// Gram factorization of a PSD matrix: row i holds the coordinates of vector i
// over the eigen-directions with eigenvalue > cutoff * max(eigenvalue, 1).
std::vector<std::vector<double>> gram_vectors(const SymMatrix& s, double cutoff = 1e-12);

struct FixedEntry {
    int i = 0, j = 0;
    double value = 0.0;
};
struct EntryLowerBound {
    int i = 0, j = 0;
    double lower = 0.0;
};

// Affine-plus-bounds feasibility instance over symmetric dim x dim matrices,
// intersected with the PSD cone.
struct FeasibilityProblem {
    int dim = 0;
    std::vector<FixedEntry> fixed;
    std::vector<EntryLowerBound> lower_bounds;
};

struct FeasibilityResult {
    bool feasible = false;
    SymMatrix witness;     // fixed entries hold exactly; bounds/PSD to `residual`
    int iterations = 0;
    double residual = 0.0; // max violation of the returned witness
};

// Dykstra's alternating projections between the affine set of fixed entries,
// the entrywise lower bounds and the PSD cone. A true return carries a
// witness whose fixed entries are exact and whose bound and eigenvalue
// violations are at most tol. A false return means the residual failed to
// fall below tol within max_iter: infeasible at tolerance, never a proof.
FeasibilityResult dykstra_feasible(const FeasibilityProblem& prob, const SymMatrix& start,
                                   double tol = 1e-7, int max_iter = 50000);

// Equality-form linear program: minimize c.x subject to A x = b, x >= 0.
struct LinearProgram {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<std::vector<double>> eq_rows;
    std::vector<double> eq_rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double value = 0.0;
    std::vector<double> x;
};

// Two-phase dense-tableau simplex with Bland's anti-cycling rule.
LpSolution simplex_solve(const LinearProgram& lp);

}  // namespace corrgraph

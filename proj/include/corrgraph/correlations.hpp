#pragma once

#include <array>
#include <vector>

#include "corrgraph/graphs.hpp"
#include "corrgraph/numerics.hpp"
#include "corrgraph/operators.hpp"

#include "json.hpp"

namespace corrgraph {

// Two-output correlation tensor p(i,j|v,w), i,j in {0,1}, v,w in {0..n-1}.
// Immutable in practice: constructors build it, operations return copies.
class SyncCorrelation {
public:
    explicit SyncCorrelation(int n);

    int input_count() const { return n_; }
    double operator()(int i, int j, int v, int w) const { return p_[flat(i, j, v, w)]; }
    void set(int i, int j, int v, int w, double value) { p_[flat(i, j, v, w)] = value; }

private:
    std::size_t flat(int i, int j, int v, int w) const;
    int n_ = 0;
    std::vector<double> p_;
};

struct ValidationReport {
    bool nonneg = false;
    bool normalized = false;
    bool nonsignalling = false;
    bool synchronous = false;
    double max_residual = 0.0;

    bool all() const { return nonneg && normalized && nonsignalling && synchronous; }
};

// Report-only checks of the defining identities; each flag holds iff the
// corresponding identity is satisfied to tol, max_residual is the worst
// violation seen across all of them.
ValidationReport validate(const SyncCorrelation& p, double tol = kDefaultTol);

struct MarginalDensities {
    std::vector<std::array<double, 2>> alice;  // p_A(i|v)
    std::vector<std::array<double, 2>> bob;    // p_B(j|w)
};

// Marginal densities; throws if the tensor signals above tol.
MarginalDensities marginals(const SyncCorrelation& p, double tol = kDefaultTol);

// Relabels inputs: output(i,j|v,w) = input(i,j|pi^{-1}(v), pi^{-1}(w)).
SyncCorrelation act_permutation(const SyncCorrelation& p, const std::vector<int>& pi);

// Swaps the two outputs on both sides: output(i,j|v,w) = input(1-i,1-j|v,w).
// Maps the marginal-t slice onto the marginal-(1-t) slice.
SyncCorrelation reflect(const SyncCorrelation& p);

// The synchronous tensor with marginal t, edge value p(0,0|v,w) = s/|E| and
// product completion t^2 on off-edge pairs. Requires
// max{0, 2t-1} <= s/|E| <= t.
SyncCorrelation from_edge_value(const Graph& g, double t, double s);

// p(i,j|v,w) = tau(E_{v,i} E_{w,j}); synchronous and nonsignalling by
// construction. Throws if the family fails the projection residual check.
SyncCorrelation from_projection_family(const ProjectionFamily& fam, double tol = kDefaultTol);

struct VectorSystem {
    std::vector<std::vector<double>> x0;  // x_{v,0}
    std::vector<std::vector<double>> x1;  // x_{v,1}
    std::vector<double> h;
};

// p(i,j|v,w) = <x_{v,i}, x_{w,j}> for a synchronous vectorial system:
// ||h|| = 1, <x_{v,0}, x_{v,1}> = 0, x_{v,0} + x_{v,1} = h and all pairwise
// inner products >= -tol.
SyncCorrelation from_vectors(const VectorSystem& sys, double tol = kDefaultTol);

// sum of p(0,0|v,w) over ordered edges.
double F_objective(const SyncCorrelation& p, const Graph& g);

// The explicit 5-input correlation that lies in the closure of the quantum
// set but not in the set itself: diagonal blocks (t,0,0,1-t), off-diagonal
// blocks (t(5t-1)/4, 5t(1-t)/4, 5t(1-t)/4, (1-t)(4-5t)/4). Requires t in
// [(sqrt5-1)/(2 sqrt5), (sqrt5+1)/(2 sqrt5)].
SyncCorrelation explicit_qa_not_q(double t);

// JSON schema: { "n": int, "p": nested array [v][w][i][j] }.
nlohmann::json correlation_to_json(const SyncCorrelation& p);
// Parses and validates; throws std::invalid_argument on schema violations.
SyncCorrelation correlation_from_json(const nlohmann::json& j);

}  // namespace corrgraph

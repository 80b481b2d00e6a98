#pragma once

#include <complex>
#include <string>
#include <vector>

#include "corrgraph/graphs.hpp"
#include "corrgraph/numerics.hpp"
#include "corrgraph/rational.hpp"

#include "json.hpp"

namespace corrgraph {

// Dense complex matrix, row-major. All projection machinery runs over the
// reals except the Clifford generators, whose pairing needs complex entries.
class CMatrix {
public:
    using value_type = std::complex<double>;

    CMatrix() = default;
    CMatrix(int rows, int cols);
    static CMatrix identity(int n);
    static CMatrix from_real(const SymMatrix& s);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    value_type operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    value_type& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    CMatrix adjoint() const;
    value_type trace() const;
    double frobenius_norm() const;
    double max_imag() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(value_type s);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(value_type s, CMatrix a) { return a *= s; }

    static CMatrix kron(const CMatrix& a, const CMatrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<value_type> a_;
};

// One direct summand of a finite-dimensional algebra: a weight, a matrix size
// and one projection E_{v,0} per input (E_{v,1} is implicitly I - E_{v,0}).
struct FamilyBlock {
    double weight = 1.0;
    int dim = 0;
    std::vector<CMatrix> proj;
};

// Family of projections with a tracial state. A single block carries the
// normalized matrix trace; several blocks carry the weighted direct-sum trace
// sum_l weight_l * tr_{dim_l}, with weights positive and summing to one.
class ProjectionFamily {
public:
    ProjectionFamily() = default;
    explicit ProjectionFamily(std::vector<CMatrix> projections);  // single block, weight 1
    explicit ProjectionFamily(std::vector<FamilyBlock> blocks);

    int size() const;  // number of inputs
    const std::vector<FamilyBlock>& blocks() const { return blocks_; }
    int total_dim() const;

    double trace(int v) const;                            // tau(E_{v,0})
    double pair_trace(int v, int w) const;                // tau(E_{v,0} E_{w,0})
    double pair_trace(int v, int i, int w, int j) const;  // tau(E_{v,i} E_{w,j})

    // max over members of ||E^2 - E||_F and ||E - E*||_F
    double projection_residual() const;
    // max over blocks of ||sum_v E_{v,0} - lambda I||_F
    double sum_residual(double lambda) const;
    // sum of the per-input traces; equals lambda for an exact lambda-sum family
    double trace_sum() const;

    // Block-diagonal embedding into a single block. Valid only when weights
    // are proportional to block dimensions (so the direct-sum normalized
    // trace coincides with the weighted block trace).
    ProjectionFamily materialized() const;

private:
    std::vector<FamilyBlock> blocks_;
};

// m pairwise-anticommuting self-adjoint trace-zero involutions in dimension
// 2^ceil(m/2) (Jordan-Wigner chains). Requires 1 <= m <= 12.
std::vector<CMatrix> clifford_generators(int m);

// Spin projections (I + (-1)^i C(x_v))/2 from unit vectors x_v; every member
// has normalized trace 1/2 and tau(E_v E_w) = (1 + <x_v,x_w>)/4.
ProjectionFamily clifford_family(const std::vector<std::vector<double>>& unit_vectors,
                                 double tol = kDefaultTol);

// Gram-factorizes a PSD completion matrix [1, t 1^T; t 1, G] for marginal
// t = 1/2 and builds the Clifford family on the recentered unit vectors
// 2 x_v - h. The resulting family attains the vectorial optimum encoded by
// the completion.
ProjectionFamily clifford_family_from_completion(const SymMatrix& completion,
                                                 double tol = kDefaultTol);

struct SearchOptions {
    int restarts = 50;
    unsigned long long seed = 12345;
    int max_iterations = 6000;
    double target_residual = 1e-8;   // early-exit goal per restart
    double accept_residual = 1e-6;   // overall success threshold
};

struct SearchResult {
    bool success = false;
    ProjectionFamily family;  // single block, dimension dim
    int dim = 0;
    int rank = 0;
    double lambda = 0.0;
    double sum_residual = 0.0;
    int restarts_used = 0;
    unsigned long long seed = 0;
};

// Numerical search for `count` rank-r projections in dimension dim_hint whose
// sum is lambda * I: alternating projections between the sum-constraint
// affine set and the product of fixed-rank projection manifolds, polished by
// rank-constrained eigenprojection. Requires count = 5, lambda rational in
// [(5-sqrt(5))/2, (5+sqrt(5))/2] and lambda*dim_hint/5 integral. Failure is
// reported in the result, never approximated silently.
SearchResult projection_sum_search(int count, const Rational& lambda, int dim_hint,
                                   const SearchOptions& opts = {});

// From 5 projections in a common dimension k with sum lambda I, builds the
// cyclic direct sums E~_i = E_i (+) E_{i+1} (+) ... (+) E_{i+4} in dimension
// 5k. All five direct sums have normalized trace lambda/5 and still sum to
// lambda I. Throws if the input sum-residual exceeds tol.
ProjectionFamily cyclic_symmetrize(const ProjectionFamily& fam, double tol = 1e-6);

// sum over ordered edges of tau(E_{v,0} E_{w,0}).
double family_objective(const ProjectionFamily& fam, const Graph& g);

// Per-vertex commutator residuals ||E_v S_v - S_v E_v||_F with
// S_v = sum_{w adjacent to v} E_w: a necessary condition for optimality of a
// family at its marginal. Block families use the direct-sum Frobenius norm.
std::vector<double> commutation_residual(const ProjectionFamily& fam, const Graph& g);

struct AutSymmetrizeResult {
    ProjectionFamily family;
    std::vector<double> block_traces;  // per input block, constant across vertices
};

// Averages a block family over Aut(G) by direct sums: block l becomes the
// |Aut(G)|-fold sum of vertex-permuted copies, preserving the overall trace
// and objective while equalizing per-block traces across vertices. Requires a
// vertex- and edge-transitive graph.
AutSymmetrizeResult aut_symmetrize(const ProjectionFamily& fam, const Graph& g);

struct FqUpperOptions {
    int restarts = 50;
    unsigned long long seed = 12345;
};

struct FqUpperResult {
    bool success = false;
    double value = 0.0;
    ProjectionFamily family;
    double lambda = 0.0;
    int dim = 0;           // dimension of the pre-symmetrization search block
    bool via_clifford = false;
    double sum_residual = 0.0;
    int restarts_used = 0;
    unsigned long long seed = 0;
};

// Certified upper bound on the synchronous quantum optimum of K_5 at a
// rational marginal t in [ (sqrt5-1)/(2 sqrt5), (sqrt5+1)/(2 sqrt5) ] with
// denominator <= 20: the objective of a concrete projection family with
// per-input trace t. t = 1/2 goes through the exact Clifford construction;
// other marginals search for a lambda-sum family (lambda = 5t) and cyclically
// symmetrize it. The value lands within 1e-5 of 5t(5t-1) on success.
FqUpperResult fq_upper(const Rational& t, const FqUpperOptions& opts = {});

// Interval of scalars lambda for which five finite-dimensional projections
// can sum to lambda I (rational points realizable).
inline constexpr double kLambdaIntervalLo = 1.3819660112501051;  // (5 - sqrt 5)/2
inline constexpr double kLambdaIntervalHi = 3.6180339887498949;  // (5 + sqrt 5)/2
// The same interval rescaled to marginals t = lambda/5.
inline constexpr double kMarginalIntervalLo = 0.27639320225002103;
inline constexpr double kMarginalIntervalHi = 0.72360679774997896;

// Witness files: serialized projection families with their residuals, seed
// and tolerances; entries are rounded to 12 significant digits.
nlohmann::json witness_to_json(const ProjectionFamily& fam, double lambda, double t,
                               unsigned long long seed, int restarts_used);
void write_witness(const std::string& path, const nlohmann::json& witness);

struct WitnessCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double threshold = 0.0;
};

struct WitnessReport {
    bool all_pass = false;
    std::vector<WitnessCheck> checks;
    double objective = 0.0;
    double lambda = 0.0;
    double t = 0.0;
};

WitnessReport verify_witness_json(const nlohmann::json& witness);
WitnessReport verify_witness_file(const std::string& path);

}  // namespace corrgraph

#include "corrgraph/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrgraph {

SyncCorrelation::SyncCorrelation(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("SyncCorrelation: input count must be positive");
    p_.assign(static_cast<std::size_t>(n) * n * 4, 0.0);
}

std::size_t SyncCorrelation::flat(int i, int j, int v, int w) const {
    if (i < 0 || i > 1 || j < 0 || j > 1 || v < 0 || w < 0 || v >= n_ || w >= n_)
        throw std::out_of_range("SyncCorrelation: index out of range");
    return ((static_cast<std::size_t>(v) * n_ + w) * 2 + i) * 2 + j;
}

ValidationReport validate(const SyncCorrelation& p, double tol) {
    const int n = p.input_count();
    ValidationReport rep;
    double neg = 0.0, norm_dev = 0.0, signal = 0.0, sync_dev = 0.0;

    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            double total = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    double val = p(i, j, v, w);
                    neg = std::max(neg, -val);
                    total += val;
                }
            norm_dev = std::max(norm_dev, std::abs(total - 1.0));
        }

    // Row marginals must not depend on w, column marginals must not depend on v.
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < 2; ++i) {
            double ref = p(i, 0, v, 0) + p(i, 1, v, 0);
            for (int w = 1; w < n; ++w)
                signal = std::max(signal, std::abs(p(i, 0, v, w) + p(i, 1, v, w) - ref));
        }
    for (int w = 0; w < n; ++w)
        for (int j = 0; j < 2; ++j) {
            double ref = p(0, j, 0, w) + p(1, j, 0, w);
            for (int v = 1; v < n; ++v)
                signal = std::max(signal, std::abs(p(0, j, v, w) + p(1, j, v, w) - ref));
        }

    for (int v = 0; v < n; ++v) {
        sync_dev = std::max(sync_dev, std::abs(p(0, 1, v, v)));
        sync_dev = std::max(sync_dev, std::abs(p(1, 0, v, v)));
    }

    rep.nonneg = neg <= tol;
    rep.normalized = norm_dev <= tol;
    rep.nonsignalling = signal <= tol;
    rep.synchronous = sync_dev <= tol;
    rep.max_residual = std::max({neg, norm_dev, signal, sync_dev});
    return rep;
}

MarginalDensities marginals(const SyncCorrelation& p, double tol) {
    auto rep = validate(p, tol);
    if (!rep.nonsignalling)
        throw std::invalid_argument("marginals: tensor signals above tolerance");
    const int n = p.input_count();
    MarginalDensities m;
    m.alice.resize(n);
    m.bob.resize(n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < 2; ++i) m.alice[v][i] = p(i, 0, v, 0) + p(i, 1, v, 0);
    for (int w = 0; w < n; ++w)
        for (int j = 0; j < 2; ++j) m.bob[w][j] = p(0, j, 0, w) + p(1, j, 0, w);
    return m;
}

SyncCorrelation act_permutation(const SyncCorrelation& p, const std::vector<int>& pi) {
    const int n = p.input_count();
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("act_permutation: permutation size mismatch");
    std::vector<int> inv(n, -1);
    for (int v = 0; v < n; ++v) {
        if (pi[v] < 0 || pi[v] >= n || inv[pi[v]] != -1)
            throw std::invalid_argument("act_permutation: not a permutation");
        inv[pi[v]] = v;
    }
    SyncCorrelation out(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) out.set(i, j, v, w, p(i, j, inv[v], inv[w]));
    return out;
}

SyncCorrelation reflect(const SyncCorrelation& p) {
    const int n = p.input_count();
    SyncCorrelation out(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) out.set(i, j, v, w, p(1 - i, 1 - j, v, w));
    return out;
}

SyncCorrelation from_edge_value(const Graph& g, double t, double s) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("from_edge_value: t must lie in [0,1]");
    const int n = g.vertex_count();
    const double edge = s / g.edge_count();
    const double lo = std::max(0.0, 2.0 * t - 1.0);
    if (edge < lo - 1e-12 || edge > t + 1e-12)
        throw std::invalid_argument("from_edge_value: s/|E| outside [max{0,2t-1}, t]");

    SyncCorrelation p(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            double p00, p01, p11;
            if (v == w) {
                p00 = t;
                p01 = 0.0;
                p11 = 1.0 - t;
            } else if (g.adjacent(v, w)) {
                p00 = edge;
                p01 = t - edge;
                p11 = 1.0 - 2.0 * t + edge;
            } else {
                p00 = t * t;
                p01 = t * (1.0 - t);
                p11 = (1.0 - t) * (1.0 - t);
            }
            p.set(0, 0, v, w, p00);
            p.set(0, 1, v, w, p01);
            p.set(1, 0, v, w, p01);
            p.set(1, 1, v, w, p11);
        }
    return p;
}

SyncCorrelation from_projection_family(const ProjectionFamily& fam, double tol) {
    if (fam.projection_residual() > std::max(tol, 1e-9))
        throw std::invalid_argument("from_projection_family: members fail the projection check");
    const int n = fam.size();
    SyncCorrelation p(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) p.set(i, j, v, w, fam.pair_trace(v, i, w, j));
    return p;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

SyncCorrelation from_vectors(const VectorSystem& sys, double tol) {
    const int n = static_cast<int>(sys.x0.size());
    if (n == 0 || sys.x1.size() != sys.x0.size())
        throw std::invalid_argument("from_vectors: inconsistent system");
    const std::size_t dim = sys.h.size();
    if (std::abs(std::sqrt(dot(sys.h, sys.h)) - 1.0) > tol)
        throw std::invalid_argument("from_vectors: h is not a unit vector");
    for (int v = 0; v < n; ++v) {
        if (sys.x0[v].size() != dim || sys.x1[v].size() != dim)
            throw std::invalid_argument("from_vectors: vector length mismatch");
        if (std::abs(dot(sys.x0[v], sys.x1[v])) > tol)
            throw std::invalid_argument("from_vectors: x_{v,0} and x_{v,1} are not orthogonal");
        for (std::size_t k = 0; k < dim; ++k)
            if (std::abs(sys.x0[v][k] + sys.x1[v][k] - sys.h[k]) > tol)
                throw std::invalid_argument("from_vectors: x_{v,0} + x_{v,1} != h");
    }
    auto vec = [&](int v, int i) -> const std::vector<double>& { return i == 0 ? sys.x0[v] : sys.x1[v]; };
    SyncCorrelation p(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    double value = dot(vec(v, i), vec(w, j));
                    if (value < -tol)
                        throw std::invalid_argument("from_vectors: negative inner product");
                    p.set(i, j, v, w, value);
                }
    return p;
}

double F_objective(const SyncCorrelation& p, const Graph& g) {
    if (p.input_count() != g.vertex_count())
        throw std::invalid_argument("F_objective: size mismatch");
    double sum = 0.0;
    for (auto [v, w] : g.edges()) sum += p(0, 0, v, w);
    return sum;
}

SyncCorrelation explicit_qa_not_q(double t) {
    if (t < kMarginalIntervalLo - 1e-12 || t > kMarginalIntervalHi + 1e-12)
        throw std::invalid_argument("explicit_qa_not_q: t outside the certified interval");
    SyncCorrelation p(5);
    const double off00 = 0.25 * t * (5.0 * t - 1.0);
    const double off01 = 1.25 * t * (1.0 - t);
    const double off11 = 0.25 * (1.0 - t) * (4.0 - 5.0 * t);
    for (int v = 0; v < 5; ++v)
        for (int w = 0; w < 5; ++w) {
            if (v == w) {
                p.set(0, 0, v, w, t);
                p.set(1, 1, v, w, 1.0 - t);
            } else {
                p.set(0, 0, v, w, off00);
                p.set(0, 1, v, w, off01);
                p.set(1, 0, v, w, off01);
                p.set(1, 1, v, w, off11);
            }
        }
    return p;
}

nlohmann::json correlation_to_json(const SyncCorrelation& p) {
    const int n = p.input_count();
    nlohmann::json rows = nlohmann::json::array();
    for (int v = 0; v < n; ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (int w = 0; w < n; ++w) {
            row.push_back({{p(0, 0, v, w), p(0, 1, v, w)}, {p(1, 0, v, w), p(1, 1, v, w)}});
        }
        rows.push_back(std::move(row));
    }
    return {{"n", n}, {"p", std::move(rows)}};
}

SyncCorrelation correlation_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("p"))
        throw std::invalid_argument("correlation_from_json: missing 'n' or 'p'");
    const int n = j.at("n").get<int>();
    if (n <= 0) throw std::invalid_argument("correlation_from_json: bad input count");
    const auto& rows = j.at("p");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("correlation_from_json: row count mismatch");
    SyncCorrelation p(n);
    for (int v = 0; v < n; ++v) {
        const auto& row = rows.at(v);
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("correlation_from_json: column count mismatch");
        for (int w = 0; w < n; ++w) {
            const auto& block = row.at(w);
            if (block.size() != 2 || block.at(0).size() != 2 || block.at(1).size() != 2)
                throw std::invalid_argument("correlation_from_json: block must be 2x2");
            for (int i = 0; i < 2; ++i)
                for (int jj = 0; jj < 2; ++jj) p.set(i, jj, v, w, block.at(i).at(jj).get<double>());
        }
    }
    return p;
}

}  // namespace corrgraph

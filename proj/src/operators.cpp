#include "corrgraph/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>

namespace corrgraph {

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("CMatrix: bad shape");
    a_.assign(static_cast<std::size_t>(rows) * cols, value_type(0.0, 0.0));
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_real(const SymMatrix& s) {
    CMatrix m(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) m.at(i, j) = s(i, j);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix::value_type CMatrix::trace() const {
    value_type t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& v : a_) sum += std::norm(v);
    return std::sqrt(sum);
}

double CMatrix::max_imag() const {
    double worst = 0.0;
    for (const auto& v : a_) worst = std::max(worst, std::abs(v.imag()));
    return worst;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(value_type s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("CMatrix: product shape mismatch");
    CMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            auto f = a(i, k);
            if (f == CMatrix::value_type(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += f * b(k, j);
        }
    return c;
}

CMatrix CMatrix::kron(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            auto f = a(i, j);
            if (f == value_type(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l) c.at(i * b.rows_ + k, j * b.cols_ + l) = f * b(k, l);
        }
    return c;
}

ProjectionFamily::ProjectionFamily(std::vector<CMatrix> projections) {
    if (projections.empty()) throw std::invalid_argument("ProjectionFamily: empty family");
    FamilyBlock b;
    b.weight = 1.0;
    b.dim = projections.front().rows();
    b.proj = std::move(projections);
    for (const auto& p : b.proj)
        if (p.rows() != b.dim || p.cols() != b.dim)
            throw std::invalid_argument("ProjectionFamily: member shape mismatch");
    blocks_.push_back(std::move(b));
}

ProjectionFamily::ProjectionFamily(std::vector<FamilyBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("ProjectionFamily: no blocks");
    double wsum = 0.0;
    std::size_t n = blocks_.front().proj.size();
    for (const auto& b : blocks_) {
        if (b.weight <= 0.0) throw std::invalid_argument("ProjectionFamily: nonpositive weight");
        if (b.proj.size() != n) throw std::invalid_argument("ProjectionFamily: block size mismatch");
        wsum += b.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("ProjectionFamily: block weights must sum to 1");
}

int ProjectionFamily::size() const {
    return blocks_.empty() ? 0 : static_cast<int>(blocks_.front().proj.size());
}

int ProjectionFamily::total_dim() const {
    int d = 0;
    for (const auto& b : blocks_) d += b.dim;
    return d;
}

namespace {

double normalized_trace_product(const CMatrix& a, const CMatrix& b) {
    // tr(ab)/dim without forming the product: sum_{ij} a(i,j) b(j,i).
    CMatrix::value_type t = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    double imag = std::abs(t.imag()) / a.rows();
    if (imag > 1e-12)
        throw std::runtime_error("ProjectionFamily: trace has non-negligible imaginary part");
    return t.real() / a.rows();
}

}  // namespace

double ProjectionFamily::trace(int v) const {
    double sum = 0.0;
    for (const auto& b : blocks_) sum += b.weight * b.proj[v].trace().real() / b.dim;
    return sum;
}

double ProjectionFamily::pair_trace(int v, int w) const {
    double sum = 0.0;
    for (const auto& b : blocks_) sum += b.weight * normalized_trace_product(b.proj[v], b.proj[w]);
    return sum;
}

double ProjectionFamily::pair_trace(int v, int i, int w, int j) const {
    double sum = 0.0;
    for (const auto& b : blocks_) {
        CMatrix ev = b.proj[v];
        CMatrix ew = b.proj[w];
        if (i == 1) {
            CMatrix id = CMatrix::identity(b.dim);
            id -= ev;
            ev = id;
        }
        if (j == 1) {
            CMatrix id = CMatrix::identity(b.dim);
            id -= ew;
            ew = id;
        }
        sum += b.weight * normalized_trace_product(ev, ew);
    }
    return sum;
}

double ProjectionFamily::projection_residual() const {
    double worst = 0.0;
    for (const auto& b : blocks_)
        for (const auto& p : b.proj) {
            worst = std::max(worst, (p * p - p).frobenius_norm());
            worst = std::max(worst, (p - p.adjoint()).frobenius_norm());
        }
    return worst;
}

double ProjectionFamily::sum_residual(double lambda) const {
    double worst = 0.0;
    for (const auto& b : blocks_) {
        CMatrix s(b.dim, b.dim);
        for (const auto& p : b.proj) s += p;
        CMatrix li = CMatrix::identity(b.dim);
        li *= lambda;
        worst = std::max(worst, (s - li).frobenius_norm());
    }
    return worst;
}

double ProjectionFamily::trace_sum() const {
    double sum = 0.0;
    for (int v = 0; v < size(); ++v) sum += trace(v);
    return sum;
}

ProjectionFamily ProjectionFamily::materialized() const {
    const int total = total_dim();
    for (const auto& b : blocks_)
        if (std::abs(b.weight - static_cast<double>(b.dim) / total) > 1e-9)
            throw std::invalid_argument(
                "ProjectionFamily::materialized: weights are not dimension-proportional");
    std::vector<CMatrix> out;
    for (int v = 0; v < size(); ++v) {
        CMatrix m(total, total);
        int off = 0;
        for (const auto& b : blocks_) {
            for (int i = 0; i < b.dim; ++i)
                for (int j = 0; j < b.dim; ++j) m.at(off + i, off + j) = b.proj[v](i, j);
            off += b.dim;
        }
        out.push_back(std::move(m));
    }
    return ProjectionFamily(std::move(out));
}

std::vector<CMatrix> clifford_generators(int m) {
    if (m < 1 || m > 12) throw std::invalid_argument("clifford_generators: need 1 <= m <= 12");
    const int q = (m + 1) / 2;
    CMatrix X(2, 2), Y(2, 2), Z(2, 2), I2 = CMatrix::identity(2);
    X.at(0, 1) = 1.0;
    X.at(1, 0) = 1.0;
    Y.at(0, 1) = CMatrix::value_type(0.0, -1.0);
    Y.at(1, 0) = CMatrix::value_type(0.0, 1.0);
    Z.at(0, 0) = 1.0;
    Z.at(1, 1) = -1.0;

    auto chain = [&](int pos, const CMatrix& mid) {
        CMatrix acc(1, 1);
        acc.at(0, 0) = 1.0;
        for (int s = 0; s < q; ++s) {
            const CMatrix& factor = (s < pos) ? Z : (s == pos ? mid : I2);
            acc = CMatrix::kron(acc, factor);
        }
        return acc;
    };

    std::vector<CMatrix> gens;
    for (int j = 0; j < q && static_cast<int>(gens.size()) < m; ++j) {
        gens.push_back(chain(j, X));
        if (static_cast<int>(gens.size()) < m) gens.push_back(chain(j, Y));
    }
    return gens;
}

ProjectionFamily clifford_family(const std::vector<std::vector<double>>& unit_vectors, double tol) {
    if (unit_vectors.empty()) throw std::invalid_argument("clifford_family: no vectors");
    const int m = static_cast<int>(unit_vectors.front().size());
    for (const auto& x : unit_vectors) {
        if (static_cast<int>(x.size()) != m)
            throw std::invalid_argument("clifford_family: vector length mismatch");
        double norm2 = 0.0;
        for (double c : x) norm2 += c * c;
        if (std::abs(std::sqrt(norm2) - 1.0) > std::max(tol, 1e-9))
            throw std::invalid_argument("clifford_family: vector is not unit length");
    }
    auto gens = clifford_generators(m);
    const int d = gens.front().rows();
    std::vector<CMatrix> proj;
    for (const auto& x : unit_vectors) {
        CMatrix c(d, d);
        for (int i = 0; i < m; ++i) {
            CMatrix g = gens[i];
            g *= x[i];
            c += g;
        }
        c += CMatrix::identity(d);
        c *= 0.5;
        proj.push_back(std::move(c));
    }
    return ProjectionFamily(std::move(proj));
}

ProjectionFamily clifford_family_from_completion(const SymMatrix& completion, double tol) {
    auto rows = gram_vectors(completion, 1e-11);
    const int n = completion.dim() - 1;
    if (n < 1) throw std::invalid_argument("clifford_family_from_completion: degenerate completion");
    const auto& h = rows[0];
    const int m = static_cast<int>(h.size());
    std::vector<std::vector<double>> recentered;
    for (int v = 1; v <= n; ++v) {
        std::vector<double> x(m);
        double norm2 = 0.0;
        for (int c = 0; c < m; ++c) {
            x[c] = 2.0 * rows[v][c] - h[c];
            norm2 += x[c] * x[c];
        }
        if (std::abs(norm2 - 1.0) > 1e-6)
            throw std::invalid_argument(
                "clifford_family_from_completion: completion is not at marginal 1/2");
        recentered.push_back(std::move(x));
    }
    return clifford_family(recentered, tol);
}

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller; avoids implementation-defined std::normal_distribution.
    double u1 = uniform01(rng);
    while (u1 <= 1e-300) u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Nearest rank-r projection of a symmetric matrix: span of the r largest
// eigendirections.
SymMatrix rank_projection(const SymMatrix& s, int r) {
    auto dec = jacobi_eigen(s);
    const int n = s.dim();
    SymMatrix p(n);
    for (int k = n - r; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            double vik = dec.vector_entry(i, k);
            for (int j = 0; j <= i; ++j) p.add(i, j, vik * dec.vector_entry(j, k));
        }
    return p;
}

SymMatrix random_rank_projection(int n, int r, std::mt19937_64& rng) {
    SymMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) s.set(i, j, gaussian(rng));
    return rank_projection(s, r);
}

}  // namespace

SearchResult projection_sum_search(int count, const Rational& lambda, int dim_hint,
                                   const SearchOptions& opts) {
    if (count != 5) throw std::invalid_argument("projection_sum_search: count must be 5");
    const double lam = lambda.value();
    if (lam < kLambdaIntervalLo - 1e-12 || lam > kLambdaIntervalHi + 1e-12)
        throw std::invalid_argument("projection_sum_search: lambda outside the realizable interval");
    const int k = dim_hint;
    if (k <= 0) throw std::invalid_argument("projection_sum_search: bad dimension");
    if (opts.restarts <= 0) throw std::invalid_argument("projection_sum_search: need restarts >= 1");
    // target rank per projection
    long long num = lambda.num * k;
    if (num % (5 * lambda.den) != 0)
        throw std::invalid_argument("projection_sum_search: lambda*dim/5 must be integral");
    const int r = static_cast<int>(num / (5 * lambda.den));
    if (r < 1 || r > k) throw std::invalid_argument("projection_sum_search: rank out of range");

    SearchResult best;
    best.dim = k;
    best.rank = r;
    best.lambda = lam;
    best.seed = opts.seed;
    best.sum_residual = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * (restart + 1));
        std::vector<SymMatrix> a;
        for (int i = 0; i < count; ++i) a.push_back(random_rank_projection(k, r, rng));

        double res = std::numeric_limits<double>::infinity();
        double prev = res;
        int stall = 0;
        for (int iter = 0; iter < opts.max_iterations; ++iter) {
            SymMatrix sum(k);
            for (const auto& m : a) sum.axpy(1.0, m);
            SymMatrix defect = sum;
            for (int i = 0; i < k; ++i) defect.add(i, i, -lam);
            res = defect.frobenius_norm();
            if (res <= opts.target_residual) break;
            if (res >= prev * 0.99999) {
                if (++stall > 400) break;
            } else {
                stall = 0;
            }
            prev = res;
            defect.scale(1.0 / count);
            for (auto& m : a) {
                SymMatrix corrected = m;
                corrected.axpy(-1.0, defect);
                m = rank_projection(corrected, r);
            }
        }
        if (res < best.sum_residual) {
            best.sum_residual = res;
            std::vector<CMatrix> proj;
            for (const auto& m : a) proj.push_back(CMatrix::from_real(m));
            best.family = ProjectionFamily(std::move(proj));
            best.restarts_used = restart + 1;
        }
        if (best.sum_residual <= opts.target_residual) break;
    }
    best.success = best.sum_residual <= opts.accept_residual;
    return best;
}

ProjectionFamily cyclic_symmetrize(const ProjectionFamily& fam, double tol) {
    if (fam.blocks().size() != 1)
        throw std::invalid_argument("cyclic_symmetrize: expected a single-block family");
    if (fam.size() != 5) throw std::invalid_argument("cyclic_symmetrize: expected 5 projections");
    const double lambda = fam.trace_sum();
    if (fam.sum_residual(lambda) > tol)
        throw std::invalid_argument("cyclic_symmetrize: input does not sum to a scalar matrix");
    const auto& block = fam.blocks().front();
    std::vector<FamilyBlock> out;
    for (int shift = 0; shift < 5; ++shift) {
        FamilyBlock b;
        b.weight = 0.2;
        b.dim = block.dim;
        for (int v = 0; v < 5; ++v) b.proj.push_back(block.proj[(v + shift) % 5]);
        out.push_back(std::move(b));
    }
    return ProjectionFamily(std::move(out));
}

double family_objective(const ProjectionFamily& fam, const Graph& g) {
    if (fam.size() != g.vertex_count())
        throw std::invalid_argument("family_objective: family size does not match graph");
    double sum = 0.0;
    for (auto [v, w] : g.edges()) sum += fam.pair_trace(v, w);
    return sum;
}

std::vector<double> commutation_residual(const ProjectionFamily& fam, const Graph& g) {
    if (fam.size() != g.vertex_count())
        throw std::invalid_argument("commutation_residual: family size does not match graph");
    std::vector<double> out(g.vertex_count(), 0.0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        double sq = 0.0;
        for (const auto& b : fam.blocks()) {
            CMatrix s(b.dim, b.dim);
            for (int w : g.neighbors(v)) s += b.proj[w];
            CMatrix comm = b.proj[v] * s - s * b.proj[v];
            double f = comm.frobenius_norm();
            sq += f * f;
        }
        out[v] = std::sqrt(sq);
    }
    return out;
}

AutSymmetrizeResult aut_symmetrize(const ProjectionFamily& fam, const Graph& g) {
    if (fam.size() != g.vertex_count())
        throw std::invalid_argument("aut_symmetrize: family size does not match graph");
    if (!is_vertex_transitive(g) || !is_edge_transitive(g))
        throw std::invalid_argument("aut_symmetrize: graph must be vertex- and edge-transitive");
    auto auts = automorphisms(g);
    const double inv_n = 1.0 / static_cast<double>(auts.size());

    AutSymmetrizeResult result;
    std::vector<FamilyBlock> out;
    for (const auto& b : fam.blocks()) {
        double r_l = 0.0;
        for (const auto& pi : auts) r_l += b.proj[pi[0]].trace().real() / b.dim;
        result.block_traces.push_back(r_l * inv_n);
        for (const auto& pi : auts) {
            FamilyBlock nb;
            nb.weight = b.weight * inv_n;
            nb.dim = b.dim;
            for (int v = 0; v < g.vertex_count(); ++v) nb.proj.push_back(b.proj[pi[v]]);
            out.push_back(std::move(nb));
        }
    }
    result.family = ProjectionFamily(std::move(out));
    return result;
}

namespace {

// The fully pinned vectorial completion of the complete graph at marginal
// 1/2: corner 1, border/diagonal 1/2, every edge entry (n-2)/(4(n-1)).
SymMatrix complete_half_completion(int n) {
    SymMatrix p(n + 1);
    p.set(0, 0, 1.0);
    const double edge = static_cast<double>(n - 2) / (4.0 * (n - 1));
    for (int v = 1; v <= n; ++v) {
        p.set(0, v, 0.5);
        p.set(v, v, 0.5);
        for (int w = 1; w < v; ++w) p.set(v, w, edge);
    }
    return p;
}

}  // namespace

FqUpperResult fq_upper(const Rational& t, const FqUpperOptions& opts) {
    const double tv = t.value();
    if (tv < kMarginalIntervalLo - 1e-12 || tv > kMarginalIntervalHi + 1e-12)
        throw std::invalid_argument("fq_upper: t outside the certified interval");
    if (t.den > 20) throw std::invalid_argument("fq_upper: denominator too large (max 20)");
    const Graph k5 = make_named("complete", 5);

    FqUpperResult res;
    res.lambda = 5.0 * tv;
    res.seed = opts.seed;

    if (t == Rational(1, 2)) {
        res.family = clifford_family_from_completion(complete_half_completion(5));
        res.value = family_objective(res.family, k5);
        res.dim = res.family.blocks().front().dim;
        res.sum_residual = res.family.sum_residual(res.lambda);
        res.via_clifford = true;
        res.success = true;
        return res;
    }

    const Rational lambda(5 * t.num, t.den);
    SearchOptions sopts;
    sopts.restarts = opts.restarts;
    sopts.seed = opts.seed;
    for (int mult : {1, 2, 4, 8}) {
        const int k = static_cast<int>(t.den) * mult;
        SearchResult sr = projection_sum_search(5, lambda, k, sopts);
        res.dim = k;
        res.sum_residual = sr.sum_residual;
        res.restarts_used += sr.restarts_used;
        if (!sr.success) continue;
        res.family = cyclic_symmetrize(sr.family, 1e-6);
        res.value = family_objective(res.family, k5);
        res.success = true;
        return res;
    }
    return res;  // reported failure, never approximated
}

namespace {

double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

}  // namespace

nlohmann::json witness_to_json(const ProjectionFamily& fam, double lambda, double t,
                               unsigned long long seed, int restarts_used) {
    ProjectionFamily flat = fam.blocks().size() == 1 ? fam : fam.materialized();
    const auto& block = flat.blocks().front();
    const int d = block.dim;

    nlohmann::json j;
    j["count"] = flat.size();
    j["dim"] = d;
    j["lambda"] = lambda;
    j["t"] = t;
    j["seed"] = seed;
    j["restarts_used"] = restarts_used;

    bool complex_entries = false;
    for (const auto& p : block.proj)
        if (p.max_imag() > 1e-14) complex_entries = true;

    nlohmann::json mats = nlohmann::json::array();
    nlohmann::json mats_im = nlohmann::json::array();
    for (const auto& p : block.proj) {
        nlohmann::json re = nlohmann::json::array();
        nlohmann::json im = nlohmann::json::array();
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                re.push_back(round12(p(i, k).real()));
                if (complex_entries) im.push_back(round12(p(i, k).imag()));
            }
        mats.push_back(std::move(re));
        if (complex_entries) mats_im.push_back(std::move(im));
    }
    j["projections"] = std::move(mats);
    if (complex_entries) j["projections_imag"] = std::move(mats_im);

    double proj_res = flat.projection_residual();
    double sum_res = flat.sum_residual(lambda);
    double trace_dev = 0.0;
    for (int v = 0; v < flat.size(); ++v) trace_dev = std::max(trace_dev, std::abs(flat.trace(v) - t));
    double objective = 0.0;
    for (int v = 0; v < flat.size(); ++v)
        for (int w = 0; w < flat.size(); ++w)
            if (v != w) objective += flat.pair_trace(v, w);

    j["objective"] = round12(objective);
    j["residuals"] = {{"projection", proj_res}, {"sum", sum_res}, {"trace_max_dev", trace_dev}};
    j["tolerances"] = {{"sum", 1e-6}, {"projection", 1e-8}, {"trace", 1e-6}, {"objective", 1e-4}};
    return j;
}

void write_witness(const std::string& path, const nlohmann::json& witness) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_witness: cannot open '" + path + "'");
    out << witness.dump(2) << "\n";
}

WitnessReport verify_witness_json(const nlohmann::json& witness) {
    const int count = witness.at("count").get<int>();
    const int d = witness.at("dim").get<int>();
    const double lambda = witness.at("lambda").get<double>();
    const double t = witness.at("t").get<double>();
    const auto& mats = witness.at("projections");
    if (static_cast<int>(mats.size()) != count)
        throw std::invalid_argument("verify_witness: projection count mismatch");
    const bool has_imag = witness.contains("projections_imag");

    std::vector<CMatrix> proj;
    for (int v = 0; v < count; ++v) {
        const auto& re = mats.at(v);
        if (static_cast<int>(re.size()) != d * d)
            throw std::invalid_argument("verify_witness: matrix size mismatch");
        CMatrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                double rp = re.at(i * d + k).get<double>();
                double ip = has_imag ? witness.at("projections_imag").at(v).at(i * d + k).get<double>() : 0.0;
                m.at(i, k) = CMatrix::value_type(rp, ip);
            }
        proj.push_back(std::move(m));
    }
    ProjectionFamily fam(std::move(proj));

    WitnessReport rep;
    rep.lambda = lambda;
    rep.t = t;

    double proj_res = fam.projection_residual();
    rep.checks.push_back({"projection_residual", proj_res <= 1e-8, proj_res, 1e-8});

    double sum_res = fam.sum_residual(lambda);
    rep.checks.push_back({"sum_residual", sum_res <= 2e-6, sum_res, 2e-6});

    double trace_dev = 0.0;
    for (int v = 0; v < count; ++v) trace_dev = std::max(trace_dev, std::abs(fam.trace(v) - t));
    rep.checks.push_back({"trace", trace_dev <= 1e-6, trace_dev, 1e-6});

    rep.objective = 0.0;
    for (int v = 0; v < count; ++v)
        for (int w = 0; w < count; ++w)
            if (v != w) rep.objective += fam.pair_trace(v, w);
    double identity_dev = std::abs(rep.objective - lambda * (lambda - 1.0));
    rep.checks.push_back({"squared_sum_identity", identity_dev <= 1e-4, identity_dev, 1e-4});

    if (witness.contains("objective")) {
        double declared_dev = std::abs(rep.objective - witness.at("objective").get<double>());
        rep.checks.push_back({"objective_declared", declared_dev <= 1e-9, declared_dev, 1e-9});
    }

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const WitnessCheck& c) { return c.pass; });
    return rep;
}

WitnessReport verify_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("verify_witness: cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return verify_witness_json(j);
}

}  // namespace corrgraph

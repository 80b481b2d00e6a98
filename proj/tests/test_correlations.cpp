#include "doctest.h"

#include <cmath>
#include <random>

#include "corrgraph/correlations.hpp"
#include "corrgraph/curves.hpp"
#include "oracles.hpp"

using namespace corrgraph;

namespace {

SyncCorrelation deterministic_all(int n, int output) {
    SyncCorrelation p(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) p.set(output, output, v, w, 1.0);
    return p;
}

SyncCorrelation random_tensor(int n, unsigned long long seed) {
    // random nonsignalling-ish tensor is not needed; group laws only need a
    // generic array of numbers
    std::mt19937_64 rng(seed);
    SyncCorrelation p(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    p.set(i, j, v, w, static_cast<double>(rng() % 1000) / 1000.0);
    return p;
}

bool tensors_equal(const SyncCorrelation& a, const SyncCorrelation& b, double tol = 0.0) {
    if (a.input_count() != b.input_count()) return false;
    for (int v = 0; v < a.input_count(); ++v)
        for (int w = 0; w < a.input_count(); ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if (std::abs(a(i, j, v, w) - b(i, j, v, w)) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("validator flags on canonical tensors") {
    auto det = deterministic_all(4, 0);
    auto rep = validate(det);
    CHECK(rep.nonneg);
    CHECK(rep.normalized);
    CHECK(rep.nonsignalling);
    CHECK(rep.synchronous);
    CHECK(rep.max_residual == 0.0);

    auto bad = deterministic_all(3, 0);
    bad.set(0, 0, 0, 0, -0.1);
    bad.set(1, 1, 0, 0, 1.1);
    CHECK_FALSE(validate(bad).nonneg);
}

TEST_CASE("edge-value reconstruction for K_5 passes every flag") {
    Graph k5 = make_named("complete", 5);
    auto p = from_edge_value(k5, 0.4, 2.0);
    auto rep = validate(p, 1e-9);
    CHECK(rep.all());
    // block entries on edges
    CHECK(p(0, 0, 0, 1) == doctest::Approx(0.1));
    CHECK(p(0, 1, 0, 1) == doctest::Approx(0.3));
    CHECK(p(1, 1, 0, 1) == doctest::Approx(0.3));
}

TEST_CASE("marginals of synchronous tensors") {
    Graph k5 = make_named("complete", 5);
    auto p = from_edge_value(k5, 0.35, 1.0);
    auto m = marginals(p);
    for (int v = 0; v < 5; ++v) {
        CHECK(m.alice[v][0] == doctest::Approx(0.35).epsilon(1e-12));
        CHECK(m.bob[v][0] == doctest::Approx(0.35).epsilon(1e-12));
        CHECK(p(0, 0, v, v) == doctest::Approx(0.35));
    }

    SyncCorrelation uniform(3);
    for (int v = 0; v < 3; ++v)
        for (int w = 0; w < 3; ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) uniform.set(i, j, v, w, 0.25);
    auto mu = marginals(uniform);
    CHECK(mu.alice[0][0] == doctest::Approx(0.5));

    auto signalling = random_tensor(3, 5);
    CHECK_THROWS_AS(marginals(signalling), std::invalid_argument);
}

TEST_CASE("input relabelling is a group action leaving F invariant") {
    auto p = random_tensor(5, 42);
    std::vector<int> id{0, 1, 2, 3, 4};
    CHECK(tensors_equal(act_permutation(p, id), p));

    std::vector<int> pi{2, 0, 1, 4, 3}, rho{1, 2, 3, 4, 0};
    std::vector<int> pirho(5);
    for (int v = 0; v < 5; ++v) pirho[v] = pi[rho[v]];
    CHECK(tensors_equal(act_permutation(p, pirho),
                        act_permutation(act_permutation(p, rho), pi), 1e-15));

    Graph k5 = make_named("complete", 5);
    auto q = from_edge_value(k5, 0.45, 1.7);
    for (const auto& aut : automorphisms(k5)) {
        CHECK(F_objective(act_permutation(q, aut), k5) ==
              doctest::Approx(F_objective(q, k5)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(act_permutation(p, std::vector<int>{0, 0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("reflection is an involution exchanging the marginal slices") {
    auto p = random_tensor(4, 9);
    CHECK(tensors_equal(reflect(reflect(p)), p));

    Graph k5 = make_named("complete", 5);
    const double t = 0.3, s = 1.2;
    auto q = from_edge_value(k5, t, s);
    auto r = reflect(q);
    auto m = marginals(r);
    for (int v = 0; v < 5; ++v) CHECK(m.alice[v][0] == doctest::Approx(1.0 - t).epsilon(1e-12));
    // F(R(p)) = |E|(1-2t) + F(p)
    CHECK(F_objective(r, k5) ==
          doctest::Approx(k5.edge_count() * (1.0 - 2.0 * t) + F_objective(q, k5)).epsilon(1e-12));

    // reflection commutes with every relabelling
    for (const std::vector<int>& pi : {std::vector<int>{1, 0, 3, 2}, {3, 2, 1, 0}})
        CHECK(tensors_equal(reflect(act_permutation(p, pi)), act_permutation(reflect(p), pi)));
}

TEST_CASE("from_edge_value closed forms and bounds") {
    Graph k5 = make_named("complete", 5);
    auto half = from_edge_value(k5, 0.5, 0.0);
    CHECK(half(0, 1, 0, 1) == doctest::Approx(0.5));
    CHECK(half(0, 0, 0, 1) == 0.0);

    Graph c5 = make_named("cycle", 5);
    auto det = from_edge_value(c5, 0.0, 0.0);
    auto rep = validate(det);
    CHECK(rep.all());
    for (int v = 0; v < 5; ++v)
        for (int w = 0; w < 5; ++w) CHECK(det(1, 1, v, w) == doctest::Approx(1.0));

    CHECK_THROWS_AS(from_edge_value(k5, 0.4, 9.0), std::invalid_argument);   // s/|E| > t
    CHECK_THROWS_AS(from_edge_value(k5, 0.9, 10.0), std::invalid_argument);  // below 2t-1
    CHECK_THROWS_AS(from_edge_value(k5, 1.2, 0.0), std::invalid_argument);

    // F(from_edge_value(g,t,s)) = s
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        double t = static_cast<double>(rng() % 1000) / 1000.0;
        auto [lo, hi] = std::pair{std::max(0.0, 2 * t - 1) * 20.0, t * 20.0};
        double s = lo + (hi - lo) * static_cast<double>(rng() % 1000) / 1000.0;
        auto p = from_edge_value(k5, t, s);
        CHECK(F_objective(p, k5) == doctest::Approx(s).epsilon(1e-12));
        CHECK(validate(p, 1e-9).all());
    }
}

TEST_CASE("projection families induce synchronous correlations") {
    // one-dimensional family: all outputs deterministic
    std::vector<CMatrix> ones;
    for (int v = 0; v < 3; ++v) ones.push_back(CMatrix::identity(1));
    auto det = from_projection_family(ProjectionFamily(std::move(ones)));
    CHECK(det(0, 0, 0, 1) == doctest::Approx(1.0));
    CHECK(validate(det, 1e-12).all());

    auto pent = oracle::pentagon_family();
    auto p = from_projection_family(pent);
    auto rep = validate(p, 1e-12);
    CHECK(rep.all());
    auto m = marginals(p);
    for (int v = 0; v < 5; ++v) CHECK(m.alice[v][0] == doctest::Approx(0.5).epsilon(1e-12));

    Graph k5 = make_named("complete", 5);
    CHECK(F_objective(p, k5) == doctest::Approx(family_objective(pent, k5)).epsilon(1e-12));
}

TEST_CASE("clifford family tensor matches the trace closed form") {
    // orthonormal pair of directions plus one oblique unit vector
    std::vector<std::vector<double>> xs = {
        {1.0, 0.0}, {0.0, 1.0}, {std::sqrt(0.5), std::sqrt(0.5)}};
    auto fam = clifford_family(xs);
    auto p = from_projection_family(fam);
    for (int v = 0; v < 3; ++v)
        for (int w = 0; w < 3; ++w) {
            double dot = 0.0;
            for (int k = 0; k < 2; ++k) dot += xs[v][k] * xs[w][k];
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    CHECK(p(i, j, v, w) ==
                          doctest::Approx(0.25 * (1.0 + ((i + j) % 2 ? -1.0 : 1.0) * dot))
                              .epsilon(1e-12));
        }
}

TEST_CASE("from_vectors on explicit systems") {
    // x_{v,0} = h: deterministic tensor
    VectorSystem sys;
    sys.h = {1.0, 0.0};
    for (int v = 0; v < 3; ++v) {
        sys.x0.push_back({1.0, 0.0});
        sys.x1.push_back({0.0, 0.0});
    }
    auto det = from_vectors(sys);
    CHECK(det(0, 0, 1, 2) == doctest::Approx(1.0));
    CHECK(validate(det, 1e-12).all());

    // Gram vectors of the K_5 completion at t = 0.4, s = 2: edge value 0.1
    Graph k5 = make_named("complete", 5);
    SymMatrix completion(6);
    completion.set(0, 0, 1.0);
    for (int v = 1; v <= 5; ++v) {
        completion.set(0, v, 0.4);
        completion.set(v, v, 0.4);
        for (int w = 1; w < v; ++w) completion.set(v, w, 0.1);
    }
    auto rows = gram_vectors(completion);
    VectorSystem gs;
    gs.h = rows[0];
    for (int v = 1; v <= 5; ++v) {
        gs.x0.push_back(rows[v]);
        std::vector<double> rest(rows[0].size());
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] = rows[0][k] - rows[v][k];
        gs.x1.push_back(rest);
    }
    auto p = from_vectors(gs, 1e-7);
    CHECK(validate(p, 1e-7).nonsignalling);
    for (auto [v, w] : k5.edges()) CHECK(p(0, 0, v, w) == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(F_objective(p, k5) == doctest::Approx(2.0).epsilon(1e-8));

    VectorSystem bad = gs;
    bad.h[0] += 0.1;  // breaks both the norm and the sum conditions
    CHECK_THROWS_AS(from_vectors(bad, 1e-9), std::invalid_argument);
}

TEST_CASE("the explicit closure point evaluates per its closed form") {
    auto p = explicit_qa_not_q(0.5);
    CHECK(p(0, 0, 0, 1) == doctest::Approx(0.1875).epsilon(1e-15));
    CHECK(p(0, 1, 0, 1) == doctest::Approx(0.3125).epsilon(1e-15));
    CHECK(p(1, 0, 0, 1) == doctest::Approx(0.3125).epsilon(1e-15));
    CHECK(p(1, 1, 0, 1) == doctest::Approx(0.1875).epsilon(1e-15));
    CHECK(validate(p, 1e-12).all());

    const double t = std::sqrt(2.0) / 2.0;
    auto q = explicit_qa_not_q(t);
    CHECK(q(0, 0, 0, 1) == doctest::Approx((2.5 - t) / 4.0).epsilon(1e-15));  // t^2 = 1/2 exactly
    CHECK(validate(q, 1e-12).all());
    auto m = marginals(q);
    for (int v = 0; v < 5; ++v) CHECK(m.alice[v][0] == doctest::Approx(t).epsilon(1e-12));

    // blocks always sum to one
    for (double tt : {0.28, 0.4, 0.62, 0.72}) {
        auto r = explicit_qa_not_q(tt);
        for (int v = 0; v < 5; ++v)
            for (int w = 0; w < 5; ++w) {
                double total = 0.0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) total += r(i, j, v, w);
                CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
            }
    }
    CHECK_THROWS_AS(explicit_qa_not_q(0.2), std::invalid_argument);
    CHECK_THROWS_AS(explicit_qa_not_q(0.8), std::invalid_argument);
}

TEST_CASE("abelian diagonal families agree with their vector systems") {
    // commuting diagonal projections = a probability measure on the atoms;
    // the induced tensor must coincide with the Gram construction on the
    // normalized indicator vectors
    const int d = 4;
    const unsigned masks[3] = {0b0011, 0b0110, 0b1010};
    std::vector<CMatrix> proj;
    VectorSystem sys;
    sys.h.assign(d, 1.0 / 2.0);  // 1/sqrt(d)
    for (unsigned mask : masks) {
        CMatrix p(d, d);
        std::vector<double> x0(d, 0.0), x1(d, 0.0);
        for (int k = 0; k < d; ++k) {
            if (mask >> k & 1u) {
                p.at(k, k) = 1.0;
                x0[k] = 0.5;
            } else {
                x1[k] = 0.5;
            }
        }
        proj.push_back(std::move(p));
        sys.x0.push_back(std::move(x0));
        sys.x1.push_back(std::move(x1));
    }
    auto from_family = from_projection_family(ProjectionFamily(std::move(proj)));
    auto from_gram = from_vectors(sys);
    CHECK(tensors_equal(from_family, from_gram, 1e-14));
}

TEST_CASE("F objective on uniform and structured tensors") {
    Graph k5 = make_named("complete", 5);
    SyncCorrelation uniform(5);
    for (int v = 0; v < 5; ++v)
        for (int w = 0; w < 5; ++w)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) uniform.set(i, j, v, w, 0.25);
    CHECK(F_objective(uniform, k5) == doctest::Approx(5.0));

    auto e = explicit_qa_not_q(0.5);
    CHECK(F_objective(e, k5) == doctest::Approx(3.75).epsilon(1e-12));

    Graph k4 = make_named("complete", 4);
    CHECK_THROWS_AS(F_objective(uniform, k4), std::invalid_argument);
}

TEST_CASE("correlation JSON round trip with validation on load") {
    auto p = explicit_qa_not_q(0.4);
    auto j = correlation_to_json(p);
    auto q = correlation_from_json(j);
    CHECK(tensors_equal(p, q));

    nlohmann::json bad = j;
    bad["p"][0][0][0].erase(1);
    CHECK_THROWS_AS(correlation_from_json(bad), std::invalid_argument);
    nlohmann::json missing;
    missing["n"] = 3;
    CHECK_THROWS_AS(correlation_from_json(missing), std::invalid_argument);
}

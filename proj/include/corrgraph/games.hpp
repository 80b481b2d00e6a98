#pragma once

#include "corrgraph/correlations.hpp"
#include "corrgraph/operators.hpp"
#include "corrgraph/rational.hpp"

#include "json.hpp"

namespace corrgraph {

// Marginal parameter of the signed game. Rationality is declared by the
// caller, never inferred from the decimal rendering of the value.
struct GameParameter {
    double value = 0.5;
    bool is_rational = true;
    Rational rational{1, 2};

    static GameParameter exact(const Rational& r) { return {r.value(), true, r}; }
    static GameParameter irrational(double v) { return {v, false, Rational()}; }
};

// Signed game with n inputs: agreement on equal inputs (received with total
// probability 1-t) is rewarded, 0-answers on unequal inputs (total
// probability t) are penalized. A = (1-t)/n and B = t/(n^2-n) are the
// per-pair input weights.
struct SignedGame {
    int n = 5;
    GameParameter t;
    double A = 0.0;
    double B = 0.0;

    SignedGame(int n_, GameParameter t_);
};

// A sum_x p(0,0|x,x) - B sum_{x != y} p(0,0|x,y).
double expected_value(const SignedGame& game, const SyncCorrelation& p);

// Same quantity evaluated directly with the family's trace:
// A sum_x tau(E_x) - B sum_{x != y} tau(E_x E_y).
double value_from_family(const SignedGame& game, const ProjectionFamily& fam);

// (A+B)/(2B): the unique maximizer of (A+B) lambda - B lambda^2.
double lambda_star(const SignedGame& game);

// (A+B)^2 / (4B).
double supremum_value(const SignedGame& game);

struct AttainmentReport {
    double lambda_star = 0.0;
    double supremum = 0.0;
    bool t_rational = false;
    bool in_interval = false;
    bool attained = false;
    double interval_lo = kLambdaIntervalLo;
    double interval_hi = kLambdaIntervalHi;
};

// For n = 5: the optimal level lambda* is realizable by a projection family
// exactly when it is rational and lies in the five-projection interval; the
// report records both tests and the conclusion.
AttainmentReport attainment_check(const SignedGame& game);

// CLI-facing report. Includes the two closed-form expansions of lambda*,
// 1 - n/2 + (n-1)/(2t) and 1 - n/2 + (n-2)/(2t), for cross-checking against
// the defining fraction.
nlohmann::json game_report_json(const SignedGame& game);

}  // namespace corrgraph

#include "corrgraph/games.hpp"

#include <cmath>
#include <stdexcept>

namespace corrgraph {

SignedGame::SignedGame(int n_, GameParameter t_) : n(n_), t(t_) {
    if (n < 5) throw std::invalid_argument("SignedGame: need n >= 5");
    if (!(t.value > 0.0 && t.value < 1.0))
        throw std::invalid_argument("SignedGame: t must lie in (0,1)");
    A = (1.0 - t.value) / n;
    B = t.value / (static_cast<double>(n) * n - n);
}

double expected_value(const SignedGame& game, const SyncCorrelation& p) {
    if (p.input_count() != game.n) throw std::invalid_argument("expected_value: size mismatch");
    double diag = 0.0, off = 0.0;
    for (int x = 0; x < game.n; ++x)
        for (int y = 0; y < game.n; ++y)
            (x == y ? diag : off) += p(0, 0, x, y);
    return game.A * diag - game.B * off;
}

double value_from_family(const SignedGame& game, const ProjectionFamily& fam) {
    if (fam.size() != game.n) throw std::invalid_argument("value_from_family: size mismatch");
    double diag = 0.0, off = 0.0;
    for (int x = 0; x < game.n; ++x) {
        diag += fam.trace(x);
        for (int y = 0; y < game.n; ++y)
            if (y != x) off += fam.pair_trace(x, y);
    }
    return game.A * diag - game.B * off;
}

double lambda_star(const SignedGame& game) { return (game.A + game.B) / (2.0 * game.B); }

double supremum_value(const SignedGame& game) {
    double s = game.A + game.B;
    return s * s / (4.0 * game.B);
}

AttainmentReport attainment_check(const SignedGame& game) {
    if (game.n != 5)
        throw std::invalid_argument("attainment_check: interval semantics are specific to n = 5");
    AttainmentReport rep;
    rep.lambda_star = lambda_star(game);
    rep.supremum = supremum_value(game);
    rep.t_rational = game.t.is_rational;
    rep.in_interval = rep.lambda_star >= kLambdaIntervalLo - 1e-12 &&
                      rep.lambda_star <= kLambdaIntervalHi + 1e-12;
    rep.attained = rep.t_rational && rep.in_interval;
    return rep;
}

nlohmann::json game_report_json(const SignedGame& game) {
    nlohmann::json j;
    j["n"] = game.n;
    j["t"] = game.t.value;
    j["t_rational"] = game.t.is_rational;
    if (game.t.is_rational) j["t_exact"] = game.t.rational.str();
    j["A"] = game.A;
    j["B"] = game.B;
    j["lambda_star"] = lambda_star(game);
    j["supremum"] = supremum_value(game);
    // Two algebraic expansions of (A+B)/(2B); they differ by 1/(2t) and only
    // the first matches the defining fraction.
    const double tv = game.t.value;
    j["lambda_star_expansions"] = {
        {"one_minus_n_half_plus_nm1_over_2t", 1.0 - game.n / 2.0 + (game.n - 1) / (2.0 * tv)},
        {"one_minus_n_half_plus_nm2_over_2t", 1.0 - game.n / 2.0 + (game.n - 2) / (2.0 * tv)}};
    if (game.n == 5) {
        auto rep = attainment_check(game);
        j["in_interval"] = rep.in_interval;
        j["attained"] = rep.attained;
        j["interval"] = {rep.interval_lo, rep.interval_hi};
    }
    return j;
}

}  // namespace corrgraph

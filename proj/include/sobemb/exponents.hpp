#pragma once

#include "sobemb/scalar.hpp"

namespace sobemb::exponents {

// A pair (alpha, beta) bounding K(r) / (r^alpha V(r)^beta) on one side.
// beta <= 1 always; engine-facing code additionally requires beta >= 0.
struct GrowthPair {
    Scalar alpha;
    Scalar beta;
};

// alpha*(beta) = max{2beta - 1 - N/2, -(1-beta)N}. Branch switch at beta=1/2.
// The same formula is evaluated for beta < 0 as well (no special casing).
Scalar alpha_star(const Scalar& beta, const Dim& n);

// q*(alpha, beta) = 2(alpha - 2beta + N)/(N - 2).
Scalar q_star(const Scalar& alpha, const Scalar& beta, const Dim& n);

// q_*(alpha, beta, gamma) = 2(alpha - gamma*beta + N)/(N - gamma).
// Throws UndefinedAtPole at gamma = N. Collapses to q_star at gamma = 2.
Scalar q_sub(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, const Dim& n);

// q_**(alpha, beta, gamma) = 2(2alpha + (1-2beta)gamma + 2(N-1))/(2(N-1) - gamma).
// Throws UndefinedAtPole at gamma = 2N-2. Collapses to q_star at gamma = 2.
Scalar q_subsub(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, const Dim& n);

struct AlphaThresholds {
    Scalar alpha1;  // -(1-beta) * gamma
    Scalar alpha2;  // -(1-beta) * N
    Scalar alpha3;  // -(N + (1-2beta) * gamma) / 2
};
AlphaThresholds alpha_thresholds(const Scalar& beta, const Scalar& gamma, const Dim& n);

// max{1, 2beta, q*(alpha,beta)} — the growth-only threshold at infinity.
// Requires beta in [0,1].
Scalar thm1_threshold(const Scalar& alpha, const Scalar& beta, const Dim& n);
// Equivalent piecewise form: max{1,2beta} for alpha <= alpha*(beta), else q*.
Scalar thm1_threshold_piecewise(const Scalar& alpha, const Scalar& beta, const Dim& n);

// max{1, 2beta, q_*, q_**} — the growth-plus-decay threshold at infinity.
// Requires beta in [0,1] and gamma <= 2 (both poles are then unreachable).
Scalar thm2_threshold(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                      const Dim& n);
// Equivalent piecewise form: q_** for alpha >= alpha1; q_* for
// max{alpha2, alpha3} <= alpha <= alpha1; max{1,2beta} below that.
Scalar thm2_threshold_piecewise(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                const Dim& n);

}  // namespace sobemb::exponents

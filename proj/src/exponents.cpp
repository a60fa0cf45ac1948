#include "sobemb/exponents.hpp"

#include "sobemb/errors.hpp"

namespace sobemb::exponents {

namespace {

const Scalar kOne(1);
const Scalar kTwo(2);

void require_beta_unit(const Scalar& beta) {
    if (beta < Scalar(0) || beta > kOne)
        throw PreconditionViolated("beta must lie in [0,1]");
}

}  // namespace

Scalar alpha_star(const Scalar& beta, const Dim& n) {
    if (beta > kOne) throw PreconditionViolated("beta must be <= 1");
    Scalar a = kTwo * beta - kOne - n.N() / kTwo;
    Scalar b = -(kOne - beta) * n.N();
    return max(a, b);
}

Scalar q_star(const Scalar& alpha, const Scalar& beta, const Dim& n) {
    if (beta > kOne) throw PreconditionViolated("beta must be <= 1");
    return kTwo * (alpha - kTwo * beta + n.N()) / Scalar(n.n() - 2);
}

Scalar q_sub(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, const Dim& n) {
    if (beta > kOne) throw PreconditionViolated("beta must be <= 1");
    if (gamma == n.N()) throw UndefinedAtPole("q_* has a pole at gamma = N");
    return kTwo * (alpha - gamma * beta + n.N()) / (n.N() - gamma);
}

Scalar q_subsub(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, const Dim& n) {
    if (beta > kOne) throw PreconditionViolated("beta must be <= 1");
    Scalar two_nm2(2 * (n.n() - 1));
    if (gamma == two_nm2) throw UndefinedAtPole("q_** has a pole at gamma = 2N-2");
    return kTwo * (kTwo * alpha + (kOne - kTwo * beta) * gamma + two_nm2) / (two_nm2 - gamma);
}

AlphaThresholds alpha_thresholds(const Scalar& beta, const Scalar& gamma, const Dim& n) {
    Scalar om_beta = kOne - beta;
    return AlphaThresholds{
        -om_beta * gamma,
        -om_beta * n.N(),
        -(n.N() + (kOne - kTwo * beta) * gamma) / kTwo,
    };
}

Scalar thm1_threshold(const Scalar& alpha, const Scalar& beta, const Dim& n) {
    require_beta_unit(beta);
    return max(max(kOne, kTwo * beta), q_star(alpha, beta, n));
}

Scalar thm1_threshold_piecewise(const Scalar& alpha, const Scalar& beta, const Dim& n) {
    require_beta_unit(beta);
    if (alpha <= alpha_star(beta, n)) return max(kOne, kTwo * beta);
    return q_star(alpha, beta, n);
}

Scalar thm2_threshold(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                      const Dim& n) {
    require_beta_unit(beta);
    if (gamma > kTwo) throw PreconditionViolated("decay threshold requires gamma <= 2");
    return max(max(max(kOne, kTwo * beta), q_sub(alpha, beta, gamma, n)),
               q_subsub(alpha, beta, gamma, n));
}

Scalar thm2_threshold_piecewise(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                const Dim& n) {
    require_beta_unit(beta);
    if (gamma > kTwo) throw PreconditionViolated("decay threshold requires gamma <= 2");
    AlphaThresholds th = alpha_thresholds(beta, gamma, n);
    if (alpha >= th.alpha1) return q_subsub(alpha, beta, gamma, n);
    if (alpha >= max(th.alpha2, th.alpha3)) return q_sub(alpha, beta, gamma, n);
    return max(kOne, kTwo * beta);
}

}  // namespace sobemb::exponents

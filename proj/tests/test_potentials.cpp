#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>

#include "doctest.h"
#include "sobemb/errors.hpp"
#include "sobemb/potentials.hpp"
#include "sobemb/scalar.hpp"

using namespace sobemb;
namespace pot = sobemb::potentials;
using P = pot::Potential;

namespace {
Scalar rat(std::int64_t p, std::int64_t q) { return Scalar(Rat(p, q)); }
}  // namespace

TEST_CASE("pointwise evaluation of each family member") {
    CHECK(P::zero().eval(1.5) == 0.0);
    CHECK(P::power(Scalar(2), Scalar(-1)).eval(4.0) == doctest::Approx(0.5));
    CHECK(P::exp_inv_r(Scalar(1)).eval(0.5) == doctest::Approx(std::exp(2.0)));
    CHECK(P::exp_r(Scalar(-2)).eval(3.0) == doctest::Approx(std::exp(-6.0)));
    CHECK(P::power_exp(Scalar(2), Scalar(1)).eval(2.0) ==
          doctest::Approx(4.0 * std::exp(-2.0)));

    // steep exponential overflows eval but log_eval stays finite
    CHECK(std::isinf(P::exp_inv_r(Scalar(1)).eval(1e-6)));
    CHECK(P::exp_inv_r(Scalar(1)).log_eval(1e-6) == doctest::Approx(1e6));
    CHECK(P::zero().log_eval(2.0) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("truncation restricts the support to one side") {
    P origin_piece = P::truncated(P::power(Scalar(1), Scalar(0)), Scalar(1), P::Side::Origin);
    CHECK(origin_piece.eval(0.5) == 1.0);
    CHECK(origin_piece.eval(2.0) == 0.0);
    P tail_piece = P::truncated(P::power(Scalar(1), Scalar(0)), Scalar(1), P::Side::Infinity);
    CHECK(tail_piece.eval(0.5) == 0.0);
    CHECK(tail_piece.eval(2.0) == 1.0);
    CHECK(origin_piece.asym(P::Side::Infinity).zero);
    CHECK_FALSE(origin_piece.asym(P::Side::Origin).zero);
}

TEST_CASE("sums take the dominant asymptotic on each side") {
    P v = P::sum(P::power(Scalar(1), Scalar(-2)), P::power(Scalar(1), Scalar(1)));
    auto at0 = v.asym(P::Side::Origin);
    CHECK(at0.pw == Scalar(-2));
    auto atinf = v.asym(P::Side::Infinity);
    CHECK(atinf.pw == Scalar(1));
    CHECK(v.eval(1.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(P::sum(v, P::zero()), InvalidSpec);  // no nested sums
}

TEST_CASE("power_exp decays exponentially at infinity") {
    P v = P::power_exp(Scalar(3), Scalar(2));  // r^3 e^{-2r}
    auto a = v.asym(P::Side::Infinity);
    CHECK(a.rate == Scalar(-2));
    CHECK(a.pw == Scalar(3));
    auto o = v.asym(P::Side::Origin);
    CHECK(o.rate == Scalar(0));
    CHECK(o.pw == Scalar(3));
}

TEST_CASE("origin envelope of an inverse power pair") {
    // V = r^-1, K = 1: K/(r^a V^b) = r^{b-a}, bounded near 0 iff a <= b.
    P v = P::power(Scalar(1), Scalar(-1));
    P k = P::power(Scalar(1), Scalar(0));
    auto env = pot::envelope_origin(v, k);
    CHECK_FALSE(env.empty());
    CHECK(env.admissible(Scalar(0), Scalar(0)));
    CHECK(env.admissible(rat(1, 4), rat(1, 2)));
    CHECK_FALSE(env.admissible(rat(3, 4), rat(1, 2)));
    auto bound = env.alpha_bound(rat(1, 2));
    REQUIRE(bound.has_value());
    CHECK(*bound == ExtScalar(rat(1, 2)));

    auto env_inf = pot::envelope_infinity(v, k);
    CHECK(env_inf.admissible(Scalar(1), rat(1, 2)));   // alpha >= beta at infinity
    CHECK_FALSE(env_inf.admissible(Scalar(0), rat(1, 2)));
}

TEST_CASE("exponential singularity dominates every power at the origin") {
    // V = e^{1/r}, K = e^{b/r} with b < 1: any (alpha, beta) with beta >= b works,
    // because the exponential surplus crushes every power of r.
    P v = P::exp_inv_r(Scalar(1));
    P k = P::exp_inv_r(rat(1, 2));
    auto env = pot::envelope_origin(v, k);
    CHECK(env.admissible(Scalar(-10), rat(1, 2)));
    CHECK(env.admissible(Scalar(10), rat(3, 4)));
    CHECK_FALSE(env.admissible(Scalar(-100), rat(1, 4)));  // beta < b never catches up
}

TEST_CASE("envelope rejects a side where the weight vanishes") {
    P k_origin_only = P::truncated(P::power(Scalar(1), Scalar(0)), Scalar(1), P::Side::Origin);
    P v = P::power(Scalar(1), Scalar(-1));
    CHECK_NOTHROW(pot::envelope_origin(v, k_origin_only));
    CHECK_THROWS_AS(pot::envelope_infinity(v, k_origin_only), UnsupportedCombination);
}

TEST_CASE("decay exponent caps") {
    auto caps = pot::gamma_caps(P::power(Scalar(1), Scalar(-2)));
    REQUIRE(caps.origin_cap.has_value());
    REQUIRE(caps.infinity_floor.has_value());
    CHECK(*caps.origin_cap == ExtScalar(Scalar(2)));
    CHECK(*caps.infinity_floor == ExtScalar(Scalar(2)));

    caps = pot::gamma_caps(P::power(Scalar(1), rat(-5, 2)));
    CHECK(*caps.origin_cap == ExtScalar(rat(5, 2)));
    CHECK_FALSE(caps.infinity_floor.has_value());  // decays too fast for gamma <= 2

    caps = pot::gamma_caps(P::power(Scalar(1), Scalar(-1)));
    CHECK_FALSE(caps.origin_cap.has_value());  // not singular enough for gamma >= 2
    CHECK(*caps.infinity_floor == ExtScalar(Scalar(1)));

    caps = pot::gamma_caps(P::exp_inv_r(Scalar(1)));
    CHECK(caps.origin_cap->is_pos_inf());

    caps = pot::gamma_caps(P::power(Scalar(1), Scalar(1)));
    CHECK(*caps.infinity_floor == ExtScalar(Scalar(-1)));  // grows like r: gamma >= -1

    caps = pot::gamma_caps(P::exp_r(Scalar(1)));
    CHECK(caps.infinity_floor->is_neg_inf());  // beats every power: any gamma works

    caps = pot::gamma_caps(P::power_exp(Scalar(1), Scalar(1)));
    CHECK_FALSE(caps.infinity_floor.has_value());  // exponential decay kills all powers

    caps = pot::gamma_caps(P::zero());
    CHECK_FALSE(caps.origin_cap.has_value());
    CHECK_FALSE(caps.infinity_floor.has_value());
}

TEST_CASE("numeric sup oracle agrees with the symbolic envelope") {
    P v = P::power(Scalar(1), Scalar(-1));
    P k = P::power(Scalar(1), Scalar(0));
    // admissible at the origin: bounded log ratio
    CHECK(pot::log_ratio_sup(v, k, 0.0, 0.5, P::Side::Origin) < 1.0);
    // inadmissible: the ratio blows up along r -> 0
    CHECK(pot::log_ratio_sup(v, k, 1.0, 0.5, P::Side::Origin) > 50.0);
}

TEST_CASE("example catalog lookups and parameter validation") {
    CHECK(pot::example_catalog().size() == 5);
    const auto& ex = pot::find_example("inverse_power");
    CHECK_THROWS_AS(pot::find_example("not_a_case"), InvalidSpec);

    auto params = pot::merge_params(ex, {{"a", Scalar(2)}});
    CHECK(params.at("a") == Scalar(2));
    CHECK(params.at("N") == Scalar(3));
    CHECK_THROWS_AS(pot::merge_params(ex, {{"bogus", Scalar(1)}}), InvalidSpec);

    CHECK_NOTHROW(ex.validate(params));
    // merging validates the merged parameter set eagerly
    CHECK_THROWS_AS(pot::merge_params(ex, {{"a", Scalar(3)}}), InvalidSpec);

    // expected verdict of the defaults, exact
    auto expect = ex.expected(pot::merge_params(ex, {}));
    CHECK(expect.single_q.lo == ExtScalar(rat(10, 3)));
    CHECK(expect.single_q.hi == ExtScalar(Scalar(6)));
}

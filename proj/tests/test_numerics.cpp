#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "sobemb/errors.hpp"
#include "sobemb/numerics.hpp"
#include "sobemb/potentials.hpp"
#include "sobemb/scalar.hpp"

using namespace sobemb;
namespace num = sobemb::numerics;
namespace pot = sobemb::potentials;
using P = pot::Potential;

namespace {
const Dim n3(3);
const double kInf = std::numeric_limits<double>::infinity();

// Piecewise-linear tent max(0, 1-r) with its exact derivative. The kink at
// r=1 costs one quadrature cell of accuracy, so tests that integrate the
// derivative use a denser grid than the default.
num::RadialFunction tent(const num::RadialGrid& g) {
    return num::RadialFunction::sample_with_derivative(
        g, [](double r) { return std::max(0.0, 1.0 - r); },
        [](double r) { return r < 1.0 ? -1.0 : 0.0; });
}
}  // namespace

TEST_CASE("log-spaced grids pin their endpoints and validate input") {
    auto g = num::RadialGrid::log_spaced(1e-4, 10, 128);
    CHECK(g.size() == 128);
    CHECK(g.nodes.front() == 1e-4);
    CHECK(g.nodes.back() == 10.0);
    CHECK(g.ratio() > 1.0);
    CHECK_THROWS_AS(num::RadialGrid::log_spaced(0, 1, 128), PreconditionViolated);
    CHECK_THROWS_AS(num::RadialGrid::log_spaced(1, 2, 8), PreconditionViolated);
    CHECK(num::default_grid().size() == 4096);
}

TEST_CASE("sphere area and sharp constant") {
    CHECK(num::sphere_area(n3) == doctest::Approx(4 * M_PI));
    CHECK(num::sphere_area(Dim(4)) == doctest::Approx(2 * M_PI * M_PI));
    CHECK(num::sharp_sobolev_constant(n3) == doctest::Approx(0.42726054).epsilon(1e-6));
}

TEST_CASE("energy norm and weighted integral of the tent profile") {
    auto g = num::RadialGrid::log_spaced(1e-6, 1e3, 32768);
    auto u = tent(g);
    // ||u'||_2^2 = omega_2 * int_0^1 r^2 dr = 4pi/3
    CHECK(num::h1v_norm(u, P::zero(), n3) ==
          doctest::Approx(std::sqrt(4 * M_PI / 3)).epsilon(1e-3));
    // with V = 1: add omega_2 * int_0^1 (1-r)^2 r^2 dr = 4pi/30
    CHECK(num::h1v_norm(u, P::power(Scalar(1), Scalar(0)), n3) ==
          doctest::Approx(std::sqrt(4 * M_PI / 3 + 4 * M_PI / 30)).epsilon(1e-3));
    CHECK(num::weighted_lq(u, P::power(Scalar(1), Scalar(0)), 2, 0, kInf, n3) ==
          doctest::Approx(4 * M_PI / 30).epsilon(1e-3));
    CHECK_THROWS_AS(num::weighted_lq(u, P::zero(), 1.0, 0, kInf, n3), PreconditionViolated);
}

TEST_CASE("quadrature converges under grid doubling") {
    auto g1 = num::RadialGrid::log_spaced(1e-6, 1e3, 4096);
    auto g2 = num::RadialGrid::log_spaced(1e-6, 1e3, 8192);
    auto v = P::power(Scalar(1), Scalar(-2));
    auto k = P::power(Scalar(1), Scalar(1));
    num::BumpFamily f1{{num::snap_scale(g1, 0.7)}};
    num::BumpFamily f2{{num::snap_scale(g2, 0.7)}};
    auto u1 = f1.member(g1, 0, n3);
    auto u2 = f2.member(g2, 0, n3);
    CHECK(num::h1v_norm(u1, v, n3) ==
          doctest::Approx(num::h1v_norm(u2, v, n3)).epsilon(1e-3));
    CHECK(num::weighted_lq(u1, k, 3, 0, kInf, n3) ==
          doctest::Approx(num::weighted_lq(u2, k, 3, 0, kInf, n3)).epsilon(1e-3));
}

TEST_CASE("bump family: support, normalization, snapped-scale invariance") {
    const auto& g = num::default_grid();
    auto fam = num::BumpFamily::geometric(0.25, 2.0, 4);
    CHECK(fam.scales.size() == 4);
    CHECK(fam.scales[3] == doctest::Approx(2.0));

    double s = num::snap_scale(g, 0.8);
    CHECK(s == doctest::Approx(0.8).epsilon(0.01));
    num::BumpFamily snapped{{s, num::snap_scale(g, 0.8 * 8)}};
    auto u1 = snapped.member(g, 0, n3);
    auto u2 = snapped.member(g, 1, n3);
    CHECK(u1.support_radius() == doctest::Approx(2 * s).epsilon(0.01));
    // the D^{1,2} normalization makes the gradient norm scale-free
    CHECK(num::h1v_norm(u1, P::zero(), n3) ==
          doctest::Approx(num::h1v_norm(u2, P::zero(), n3)).epsilon(1e-6));
}

TEST_CASE("weighted_mixed pairs u against h and degenerates to weighted_lq") {
    const auto& g = num::default_grid();
    num::BumpFamily fam{{num::snap_scale(g, 0.5), num::snap_scale(g, 1.0)}};
    auto u = fam.member(g, 0, n3);
    auto h = fam.member(g, 1, n3);
    auto k = P::power(Scalar(1), Scalar(0));
    CHECK(num::weighted_mixed(u, u, k, 3, 0, kInf, n3) ==
          doctest::Approx(num::weighted_lq(u, k, 3, 0, kInf, n3)));
    CHECK(num::weighted_mixed(u, h, k, 3, 0, kInf, n3) > 0);
    auto other_grid = num::RadialGrid::log_spaced(1e-5, 1e2, 256);
    auto w = num::RadialFunction::sample(other_grid, [](double) { return 1.0; });
    CHECK_THROWS_AS(num::weighted_mixed(u, w, k, 3, 0, kInf, n3), PreconditionViolated);
}

TEST_CASE("integrand overflow raises NonIntegrable") {
    const auto& g = num::default_grid();
    num::BumpFamily fam{{num::snap_scale(g, 1e-5)}};
    auto u = fam.member(g, 0, n3);  // supported where e^{1/r} overflows
    CHECK_THROWS_AS(num::h1v_norm(u, P::exp_inv_r(Scalar(1)), n3), NonIntegrable);
}

TEST_CASE("slope fit recovers exact power laws and rejects bad data") {
    std::vector<double> radii, vals;
    for (int i = 1; i <= 6; ++i) {
        double R = std::pow(2.0, -i);
        radii.push_back(R);
        vals.push_back(3.0 * std::pow(R, 1.75));
    }
    CHECK(num::decay_slope_fit(radii, vals) == doctest::Approx(1.75).epsilon(1e-12));
    CHECK_THROWS_AS(num::decay_slope_fit({1, 2, 3}, {1, 2, 3}), PreconditionViolated);
    CHECK_THROWS_AS(num::decay_slope_fit({1, 2, 3, 4}, {1, 2, 3, 0}), DegenerateFit);
}

TEST_CASE("restricted-sup lower bound scales like the critical-gap power") {
    const auto& g = num::default_grid();
    auto k = P::power(Scalar(1), Scalar(0));
    std::vector<double> radii, vals;
    for (int i = 1; i <= 6; ++i) {
        double R = std::pow(2.0, -i);
        num::BumpFamily fam{{R / 2}};
        radii.push_back(R);
        vals.push_back(
            num::s_lower_bound(4.0, R, P::Side::Origin, P::zero(), k, fam, g, n3));
    }
    // alpha=0, q=4, N=3: slope (N-2)(q*-q)/2 = (6-4)/2 = 1
    CHECK(num::decay_slope_fit(radii, vals) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("pointwise ratio modes and their guards") {
    const auto& g = num::default_grid();
    num::BumpFamily fam{{num::snap_scale(g, 1.0)}};
    auto u = fam.member(g, 0, n3);
    CHECK(num::pointwise_ratio(u, num::PointwiseMode::ni(), n3) > 0);
    CHECK(num::pointwise_ratio(u, num::PointwiseMode::infinity(2.0, 1.0, 0.5), n3) > 0);
    // origin mode demands support inside the ball of the given radius
    CHECK_THROWS_AS(num::pointwise_ratio(u, num::PointwiseMode::origin(3.0, 1.0, 0.5), n3),
                    PreconditionViolated);
    CHECK_NOTHROW(num::pointwise_ratio(u, num::PointwiseMode::origin(3.0, 1.0, 10.0), n3));
    auto zero = num::RadialFunction::sample(g, [](double) { return 0.0; });
    CHECK_THROWS_AS(num::pointwise_ratio(zero, num::PointwiseMode::ni(), n3), ZeroFunction);
}

TEST_CASE("annular growth check guards its branch domain") {
    const auto& g = num::default_grid();
    num::BumpFamily fam{{num::snap_scale(g, 1.0)}};
    auto u = fam.member(g, 0, n3);
    num::OmegaCheckInput in;
    in.r_lo = 0.01;
    in.r_hi = 10;
    in.alpha = 0;
    in.beta = 1.0;
    in.q = 2.0;  // beta = 1 requires q > 2
    in.m = 10;
    in.nu = 0.5;
    CHECK_THROWS_AS(
        num::lemma_omega_check(u, u, in, P::power(Scalar(1), Scalar(-1)), P::zero(), n3),
        BranchDomain);
    in.beta = 1.5;
    CHECK_THROWS_AS(
        num::lemma_omega_check(u, u, in, P::power(Scalar(1), Scalar(-1)), P::zero(), n3),
        PreconditionViolated);
}

TEST_CASE("annulus interpolation check validates the integrability exponent") {
    const auto& g = num::default_grid();
    num::BumpFamily fam{{num::snap_scale(g, 1.0)}};
    auto u = fam.member(g, 0, n3);
    auto k = P::power(Scalar(1), Scalar(0));
    CHECK_THROWS_AS(num::annulus_check(u, u, 0.05, 5.0, 1.5, k, 1.1, P::zero(), n3),
                    PreconditionViolated);  // s <= 2N/(N+2)
    auto rep = num::annulus_check(u, u, 0.05, 5.0, 1.5, k, 2.0, P::zero(), n3);
    CHECK(rep.holds);
}

TEST_CASE("sum-space split never exceeds the better single norm") {
    const auto& g = num::default_grid();
    num::BumpFamily fam{{num::snap_scale(g, 1.0)}};
    auto u = fam.member(g, 0, n3);
    auto k = P::power(Scalar(1), Scalar(0));
    double split = num::sum_norm_split(u, k, 2.0, 4.0, n3);
    double p1 = std::pow(num::weighted_lq(u, k, 2, 0, kInf, n3), 1.0 / 2);
    double p2 = std::pow(num::weighted_lq(u, k, 4, 0, kInf, n3), 1.0 / 4);
    CHECK(split <= std::min(p1, p2) * (1 + 1e-12));
    CHECK(split > 0);
    CHECK_THROWS_AS(num::sum_norm_split(u, k, 4.0, 2.0, n3), PreconditionViolated);
}

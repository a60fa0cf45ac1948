#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sobemb/errors.hpp"
#include "sobemb/exponents.hpp"
#include "sobemb/scalar.hpp"

using namespace sobemb;
namespace exp_ = sobemb::exponents;

namespace {
const Dim n3(3);
const Dim n4(4);
Scalar rat(std::int64_t p, std::int64_t q) { return Scalar(Rat(p, q)); }
}  // namespace

TEST_CASE("alpha_star branch values") {
    CHECK(exp_::alpha_star(Scalar(0), n3) == rat(-5, 2));
    CHECK(exp_::alpha_star(rat(1, 2), n3) == rat(-3, 2));  // both branches agree here
    CHECK(exp_::alpha_star(Scalar(1), n3) == Scalar(0));
    CHECK(exp_::alpha_star(Scalar(1), n4) == Scalar(0));
    CHECK(exp_::alpha_star(rat(3, 4), n3) == rat(-3, 4));  // -(1-b)N branch wins above 1/2
    CHECK(exp_::alpha_star(rat(1, 4), n3) == Scalar(-2));  // 2b-1-N/2 branch wins below 1/2
}

TEST_CASE("q_star closed form and special values") {
    CHECK(exp_::q_star(Scalar(1), Scalar(0), n3) == Scalar(8));
    CHECK(exp_::q_star(exp_::alpha_star(Scalar(0), n3), Scalar(0), n3) == Scalar(1));
    CHECK(exp_::q_star(Scalar(0), Scalar(1), n3) == Scalar(2));
    CHECK(exp_::q_star(Scalar(0), Scalar(0), n3) == n3.two_star());
    CHECK(exp_::q_star(rat(1, 3), rat(1, 6), n3) == Scalar(6));  // 2(1/3-1/3+3)/1
    CHECK(exp_::q_star(rat(1, 3), rat(1, 6), n3).exact());
}

TEST_CASE("q_sub: collapse at gamma=2, explicit value, pole") {
    CHECK(exp_::q_sub(rat(7, 5), rat(2, 7), Scalar(2), n3) ==
          exp_::q_star(rat(7, 5), rat(2, 7), n3));
    CHECK(exp_::q_sub(Scalar(0), Scalar(0), Scalar(0), n3) == Scalar(2));
    CHECK_THROWS_AS(exp_::q_sub(Scalar(1), Scalar(0), Scalar(3), n3), UndefinedAtPole);
    CHECK_NOTHROW(exp_::q_sub(Scalar(1), Scalar(0), Scalar(3), n4));
}

TEST_CASE("q_subsub: collapse at gamma=2, explicit value, pole") {
    CHECK(exp_::q_subsub(rat(-3, 2), rat(5, 8), Scalar(2), n3) ==
          exp_::q_star(rat(-3, 2), rat(5, 8), n3));
    CHECK(exp_::q_subsub(Scalar(0), rat(1, 2), Scalar(0), n3) == Scalar(2));
    CHECK_THROWS_AS(exp_::q_subsub(Scalar(0), Scalar(0), Scalar(4), n3), UndefinedAtPole);
    CHECK_NOTHROW(exp_::q_subsub(Scalar(0), Scalar(0), Scalar(4), n4));
}

TEST_CASE("alpha_thresholds hand values") {
    auto t = exp_::alpha_thresholds(Scalar(1), Scalar(4), n4);  // beta=1, gamma=N
    CHECK(t.alpha1 == Scalar(0));
    CHECK(t.alpha2 == Scalar(0));
    CHECK(t.alpha3 == Scalar(0));

    t = exp_::alpha_thresholds(Scalar(0), Scalar(2), n3);
    CHECK(t.alpha1 == Scalar(-2));
    CHECK(t.alpha2 == Scalar(-3));
    CHECK(t.alpha3 == rat(-5, 2));
    CHECK(max(t.alpha2, t.alpha3) == exp_::alpha_star(Scalar(0), n3));

    t = exp_::alpha_thresholds(rat(1, 2), Scalar(4), n3);
    CHECK(t.alpha1 == Scalar(-2));
    CHECK(t.alpha2 == rat(-3, 2));
    CHECK(t.alpha3 == rat(-3, 2));
}

TEST_CASE("growth-only threshold: max form, documented values, piecewise split") {
    CHECK(exp_::thm1_threshold(Scalar(0), Scalar(1), n3) == Scalar(2));
    CHECK(exp_::thm1_threshold(rat(-3, 2), rat(1, 2), n3) == Scalar(1));
    CHECK(exp_::thm1_threshold(Scalar(1), Scalar(0), n3) == Scalar(8));

    // below the sign-change alpha the q* term is inactive
    Scalar beta = rat(1, 4);
    Scalar astar = exp_::alpha_star(beta, n3);
    CHECK(exp_::thm1_threshold(astar - Scalar(1), beta, n3) == Scalar(1));
    CHECK(exp_::thm1_threshold_piecewise(astar - Scalar(1), beta, n3) == Scalar(1));
    CHECK(exp_::thm1_threshold(astar + Scalar(1), beta, n3) ==
          exp_::q_star(astar + Scalar(1), beta, n3));
    // exact agreement of both forms at the seam itself
    CHECK(exp_::thm1_threshold_piecewise(astar, beta, n3) ==
          exp_::thm1_threshold(astar, beta, n3));
    CHECK_THROWS_AS(exp_::thm1_threshold(Scalar(0), Scalar(2), n3), PreconditionViolated);
}

TEST_CASE("decay-refined threshold: documented values and seams") {
    // alpha = 1-a, beta = 0, gamma = a: threshold 2(2N-a)/(2N-a-2)
    CHECK(exp_::thm2_threshold(Scalar(0), Scalar(0), Scalar(1), n3) == rat(10, 3));
    CHECK(exp_::thm2_threshold(Scalar(-1), Scalar(0), Scalar(2), n3) ==
          exp_::thm1_threshold(Scalar(-1), Scalar(0), n3));
    CHECK(exp_::thm2_threshold(Scalar(-10), Scalar(0), Scalar(0), n3) == Scalar(1));

    // piecewise form agrees exactly across all three branches and both seams
    Scalar beta = rat(1, 3), gamma = rat(-5, 4);
    auto t = exp_::alpha_thresholds(beta, gamma, n3);
    Scalar seam_lo = max(t.alpha2, t.alpha3);
    for (Scalar alpha : {seam_lo - Scalar(1), seam_lo, (seam_lo + t.alpha1) / Scalar(2),
                         t.alpha1, t.alpha1 + Scalar(2)}) {
        CHECK(exp_::thm2_threshold_piecewise(alpha, beta, gamma, n3) ==
              exp_::thm2_threshold(alpha, beta, gamma, n3));
    }
    CHECK_THROWS_AS(exp_::thm2_threshold(Scalar(0), Scalar(0), Scalar(3), n3), PreconditionViolated);
}

TEST_CASE("shift invariance of the gamma-dependent exponents") {
    Scalar a = rat(7, 3), b = rat(-4, 5), g = rat(9, 2);
    CHECK(exp_::q_sub(a - b * g, Scalar(0), g, n3) == exp_::q_sub(a, b, g, n3));
    CHECK(exp_::q_subsub(a - b * g, Scalar(0), g, n3) == exp_::q_subsub(a, b, g, n3));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sobemb/errors.hpp"
#include "sobemb/interval.hpp"
#include "sobemb/scalar.hpp"

using namespace sobemb;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rat(2, 4).num == 1);
    CHECK(Rat(2, 4).den == 2);
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(5, 1).str() == "5");
    CHECK(Rat(0, -7).str() == "0");
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("exact arithmetic stays exact and is decided by cross multiplication") {
    Scalar third(Rat(1, 3)), sixth(Rat(1, 6));
    Scalar sum = third + sixth;
    CHECK(sum.exact());
    CHECK(sum == Scalar(Rat(1, 2)));
    CHECK((third * Scalar(3)) == Scalar(1));
    CHECK((Scalar(1) / Scalar(3)).str() == "1/3");
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);

    // 1/3 != 0.333...: exact-vs-exact comparisons have no tolerance.
    CHECK(Scalar(Rat(1, 3)) != Scalar(Rat(333333, 1000000)));
}

TEST_CASE("parse accepts integers, fractions, decimals and scientific notation") {
    CHECK(Scalar::parse("10/3") == Scalar(Rat(10, 3)));
    CHECK(Scalar::parse("-3.5") == Scalar(Rat(-7, 2)));
    CHECK(Scalar::parse("0.1") == Scalar(Rat(1, 10)));  // digit-wise, not binary
    CHECK(Scalar::parse("0.1").exact());
    CHECK(Scalar::parse("2e3") == Scalar(2000));
    CHECK(Scalar::parse("  7 ") == Scalar(7));
    CHECK_THROWS_AS(Scalar::parse("abc"), InvalidSpec);
    CHECK_THROWS_AS(Scalar::parse(""), InvalidSpec);
}

TEST_CASE("from_double keeps dyadic doubles exact") {
    CHECK(Scalar::from_double(0.5) == Scalar(Rat(1, 2)));
    CHECK(Scalar::from_double(0.5).exact());
    Scalar tenth = Scalar::from_double(0.1);  // 0.1 is dyadic as a double
    CHECK(tenth.exact());
    CHECK(tenth.value() == 0.1);
    CHECK(tenth != Scalar(Rat(1, 10)));  // the double is not exactly 1/10
    CHECK_THROWS_AS(Scalar::from_double(INFINITY), InvalidSpec);
}

TEST_CASE("inexact comparisons use a relative tolerance with ties equal") {
    Scalar a = Scalar::inexact(1.0);
    Scalar b = Scalar::inexact(1.0 + 1e-13);
    CHECK(a == b);
    CHECK_FALSE(a < b);  // strict predicates fail at fuzzy boundaries
    CHECK(Scalar::inexact(1.0) < Scalar::inexact(1.0 + 1e-9));
}

TEST_CASE("overflowing exact operations degrade to doubles instead of wrapping") {
    Scalar big(Rat(1, 3));
    for (int i = 0; i < 9; ++i) big = big * big;  // den 3^512 overflows long ago
    CHECK_FALSE(big.exact());
    CHECK(big.value() == doctest::Approx(0.0));
    Scalar huge = Scalar(std::int64_t(1) << 62) * Scalar(std::int64_t(1) << 62);
    CHECK_FALSE(huge.exact());
    CHECK(huge.value() == doctest::Approx(std::pow(2.0, 124)));
}

TEST_CASE("min max abs") {
    CHECK(min(Scalar(Rat(1, 3)), Scalar(Rat(1, 4))) == Scalar(Rat(1, 4)));
    CHECK(max(Scalar(-2), Scalar(1)) == Scalar(1));
    CHECK(abs(Scalar(Rat(-7, 2))) == Scalar(Rat(7, 2)));
}

TEST_CASE("dimension guard and critical exponent") {
    CHECK(Dim(3).two_star() == Scalar(6));
    CHECK(Dim(4).two_star() == Scalar(4));
    CHECK(Dim(6).two_star() == Scalar(3));
    CHECK_THROWS_AS(Dim(2), InvalidSpec);
}

TEST_CASE("extended scalars order infinities correctly") {
    ExtScalar lo = ExtScalar::neg_inf(), hi = ExtScalar::pos_inf();
    CHECK(lo < ExtScalar(Scalar(-1000000)));
    CHECK(ExtScalar(Scalar(1000000)) < hi);
    CHECK(lo < hi);
    CHECK(min(hi, ExtScalar(Scalar(3))) == ExtScalar(Scalar(3)));
    CHECK(max(lo, ExtScalar(Scalar(3))) == ExtScalar(Scalar(3)));
    CHECK(hi.str() == "inf");
    CHECK(lo.str() == "-inf");
}

TEST_CASE("open q-intervals: emptiness, containment, hull, intersection") {
    QInterval iv(ExtScalar(Scalar(1)), ExtScalar(Scalar(6)));
    CHECK_FALSE(iv.empty());
    CHECK(iv.contains(Scalar(3)));
    CHECK_FALSE(iv.contains(Scalar(6)));  // open at the endpoint
    CHECK_FALSE(iv.contains(Scalar(1)));

    QInterval half(ExtScalar(Scalar(Rat(10, 3))), ExtScalar::pos_inf());
    QInterval both = iv.intersect(half);
    CHECK(both.lo == ExtScalar(Scalar(Rat(10, 3))));
    CHECK(both.hi == ExtScalar(Scalar(6)));

    QInterval empty = QInterval::empty_interval();
    CHECK(empty.empty());
    CHECK(empty.hull(iv).same_as(iv));
    CHECK(iv.hull(half).lo == ExtScalar(Scalar(1)));
    CHECK(iv.hull(half).hi == ExtScalar::pos_inf());
    CHECK(iv.intersect(QInterval(ExtScalar(Scalar(7)), ExtScalar(Scalar(9)))).empty());
}

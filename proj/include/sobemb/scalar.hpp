#pragma once

#include <cstdint>
#include <string>

namespace sobemb {

// Normalized rational with 64-bit components. den > 0 always; gcd(num,den) = 1.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n, std::int64_t d);

    std::string str() const;  // "p/q", or "p" when q == 1
};

// A real number that stays exact (as a Rat) as long as every input was exact
// and no intermediate overflows 64 bits; otherwise it degrades to a double.
// Comparisons between exact values are decided by cross multiplication; any
// comparison touching an inexact value uses a relative tolerance of 1e-12,
// with ties reported as equality. Strict predicates therefore fail at fuzzy
// boundaries, which is the conservative direction for membership claims.
class Scalar {
  public:
    static constexpr double kCmpTol = 1e-12;

    Scalar() : exact_(true), rat_(0, 1), val_(0.0) {}
    Scalar(int v) : Scalar(static_cast<std::int64_t>(v)) {}
    Scalar(std::int64_t v);
    explicit Scalar(const Rat& r);

    // Exact when the double is p/2^k with both parts in 64-bit range.
    static Scalar from_double(double v);
    static Scalar inexact(double v);
    // Accepts integers, fractions "p/q", finite decimals, scientific notation.
    // Decimal/scientific strings are converted digit-wise, so "0.1" is exactly
    // 1/10. Falls back to an inexact double when the digits overflow.
    static Scalar parse(const std::string& text);

    bool exact() const { return exact_; }
    const Rat& rat() const { return rat_; }
    double value() const { return val_; }
    std::string str() const;  // exact: Rat::str(); inexact: shortest double

    int cmp(const Scalar& o) const;  // -1 / 0 / +1
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }
    bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
    bool operator>(const Scalar& o) const { return cmp(o) > 0; }
    bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }
    bool operator==(const Scalar& o) const { return cmp(o) == 0; }
    bool operator!=(const Scalar& o) const { return cmp(o) != 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on exact-zero divisor
    Scalar operator-() const;

    bool is_zero() const;

  private:
    bool exact_;
    Rat rat_;
    double val_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
Scalar abs(const Scalar& a);

// Spatial dimension N >= 3.
class Dim {
  public:
    explicit Dim(int n);
    int n() const { return n_; }
    Scalar N() const { return Scalar(n_); }
    // 2* = 2N/(N-2), the critical Sobolev exponent.
    Scalar two_star() const;

  private:
    int n_;
};

}  // namespace sobemb

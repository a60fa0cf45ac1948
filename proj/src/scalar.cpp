#include "sobemb/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sobemb/errors.hpp"

namespace sobemb {

namespace {

using i128 = __int128;

constexpr std::int64_t kMagLimit = std::int64_t(1) << 62;

bool fits(i128 v) { return v > -i128(kMagLimit) && v < i128(kMagLimit); }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

double to_dbl(i128 v) {
    bool neg = v < 0;
    if (neg) v = -v;
    double out = 0.0;
    // 2^64 split is exact in double arithmetic.
    out = static_cast<double>(static_cast<std::uint64_t>(v >> 64)) * 18446744073709551616.0 +
          static_cast<double>(static_cast<std::uint64_t>(v));
    return neg ? -out : out;
}

// Builds a Scalar from a 128-bit fraction, degrading to double on overflow.
Scalar make_frac(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("division by zero in rational arithmetic");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (fits(num) && fits(den))
        return Scalar(Rat(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)));
    return Scalar::inexact(to_dbl(num) / to_dbl(den));
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Scalar::Scalar(std::int64_t v) : exact_(true), rat_(v, 1), val_(static_cast<double>(v)) {}

Scalar::Scalar(const Rat& r)
    : exact_(true), rat_(r), val_(static_cast<double>(r.num) / static_cast<double>(r.den)) {}

Scalar Scalar::inexact(double v) {
    Scalar s;
    s.exact_ = false;
    s.rat_ = Rat(0, 1);
    s.val_ = v;
    return s;
}

Scalar Scalar::from_double(double v) {
    if (!std::isfinite(v)) throw InvalidSpec("non-finite number where a real value is required");
    if (v == 0.0) return Scalar(0);
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 mantissa bits: mant * 2^53 is an integer.
    double scaled = std::ldexp(mant, 53);
    if (scaled != std::floor(scaled)) return Scalar::inexact(v);
    std::int64_t p = static_cast<std::int64_t>(scaled);
    int k = exp - 53;  // v = p * 2^k
    while (p % 2 == 0 && k < 0) {
        p /= 2;
        ++k;
    }
    if (k >= 0) {
        if (k >= 62) return Scalar::inexact(v);
        i128 num = i128(p) << k;
        if (!fits(num)) return Scalar::inexact(v);
        return Scalar(Rat(static_cast<std::int64_t>(num), 1));
    }
    if (-k >= 62) return Scalar::inexact(v);
    std::int64_t den = std::int64_t(1) << (-k);
    return Scalar(Rat(p, den));
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InvalidSpec("empty number");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Scalar a = Scalar::parse(s.substr(0, slash));
        Scalar b = Scalar::parse(s.substr(slash + 1));
        return a / b;
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    long exp10 = 0;
    bool seen_dot = false, seen_digit = false, overflow = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
            if (digits.size() < 18)
                digits.push_back(c);
            else if (!seen_dot)
                overflow = true;  // integer part too long for 64 bits
            if (seen_dot && digits.size() <= 18) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exp10 = std::strtol(s.c_str() + i + 1, nullptr, 10);
            break;
        } else {
            throw InvalidSpec("cannot parse number: '" + text + "'");
        }
    }
    if (!seen_digit) throw InvalidSpec("cannot parse number: '" + text + "'");
    double as_double = std::strtod(s.c_str(), nullptr);
    if (overflow) return Scalar::inexact(as_double);

    std::int64_t mantissa = digits.empty() ? 0 : std::strtoll(digits.c_str(), nullptr, 10);
    if (neg) mantissa = -mantissa;
    long net = exp10 - frac_digits;
    i128 num = mantissa, den = 1;
    if (net > 18 || net < -18) return Scalar::inexact(as_double);
    for (long k = 0; k < net; ++k) num *= 10;
    for (long k = 0; k < -net; ++k) den *= 10;
    return make_frac(num, den);
}

std::string Scalar::str() const {
    if (exact_) return rat_.str();
    std::ostringstream os;
    os.precision(17);
    os << val_;
    return os.str();
}

int Scalar::cmp(const Scalar& o) const {
    if (exact_ && o.exact_) {
        i128 lhs = i128(rat_.num) * o.rat_.den;
        i128 rhs = i128(o.rat_.num) * rat_.den;
        if (lhs < rhs) return -1;
        if (lhs > rhs) return 1;
        return 0;
    }
    double a = val_, b = o.val_;
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    if (std::fabs(a - b) <= kCmpTol * scale) return 0;
    return a < b ? -1 : 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (exact_ && o.exact_)
        return make_frac(i128(rat_.num) * o.rat_.den + i128(o.rat_.num) * rat_.den,
                         i128(rat_.den) * o.rat_.den);
    return inexact(val_ + o.val_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (exact_ && o.exact_)
        return make_frac(i128(rat_.num) * o.rat_.den - i128(o.rat_.num) * rat_.den,
                         i128(rat_.den) * o.rat_.den);
    return inexact(val_ - o.val_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (exact_ && o.exact_)
        return make_frac(i128(rat_.num) * o.rat_.num, i128(rat_.den) * o.rat_.den);
    return inexact(val_ * o.val_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    if (exact_ && o.exact_)
        return make_frac(i128(rat_.num) * o.rat_.den, i128(rat_.den) * o.rat_.num);
    return inexact(val_ / o.val_);
}

Scalar Scalar::operator-() const {
    if (exact_) return Scalar(Rat(-rat_.num, rat_.den));
    return inexact(-val_);
}

bool Scalar::is_zero() const { return exact_ ? rat_.num == 0 : val_ == 0.0; }

Scalar min(const Scalar& a, const Scalar& b) { return a.cmp(b) <= 0 ? a : b; }
Scalar max(const Scalar& a, const Scalar& b) { return a.cmp(b) >= 0 ? a : b; }
Scalar abs(const Scalar& a) { return a.cmp(Scalar(0)) < 0 ? -a : a; }

Dim::Dim(int n) : n_(n) {
    if (n < 3) throw InvalidSpec("dimension must be at least 3");
}

Scalar Dim::two_star() const { return Scalar(2 * n_) / Scalar(n_ - 2); }

}  // namespace sobemb

#include "sobemb/interval.hpp"

namespace sobemb {

double ExtScalar::value() const {
    switch (kind_) {
        case Kind::NegInf: return -std::numeric_limits<double>::infinity();
        case Kind::PosInf: return std::numeric_limits<double>::infinity();
        default: return fin_.value();
    }
}

int ExtScalar::cmp(const ExtScalar& o) const {
    if (kind_ == o.kind_) {
        if (kind_ == Kind::Finite) return fin_.cmp(o.fin_);
        return 0;  // two like infinities
    }
    if (kind_ == Kind::NegInf || o.kind_ == Kind::PosInf) return -1;
    return 1;
}

std::string ExtScalar::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        default: return fin_.str();
    }
}

ExtScalar min(const ExtScalar& a, const ExtScalar& b) { return a.cmp(b) <= 0 ? a : b; }
ExtScalar max(const ExtScalar& a, const ExtScalar& b) { return a.cmp(b) >= 0 ? a : b; }

std::string QInterval::str() const {
    if (empty()) return "(empty)";
    return "(" + lo.str() + ", " + hi.str() + ")";
}

}  // namespace sobemb

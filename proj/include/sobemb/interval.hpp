#pragma once

#include <optional>
#include <string>

#include "sobemb/scalar.hpp"

namespace sobemb {

// Extended real: a Scalar or one of the two infinities.
class ExtScalar {
  public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtScalar() : kind_(Kind::Finite), fin_(0) {}
    ExtScalar(const Scalar& s) : kind_(Kind::Finite), fin_(s) {}
    ExtScalar(int v) : kind_(Kind::Finite), fin_(v) {}

    static ExtScalar neg_inf() { return ExtScalar(Kind::NegInf); }
    static ExtScalar pos_inf() { return ExtScalar(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    // Only valid when finite().
    const Scalar& fin() const { return fin_; }
    double value() const;

    int cmp(const ExtScalar& o) const;
    bool operator<(const ExtScalar& o) const { return cmp(o) < 0; }
    bool operator<=(const ExtScalar& o) const { return cmp(o) <= 0; }
    bool operator>(const ExtScalar& o) const { return cmp(o) > 0; }
    bool operator>=(const ExtScalar& o) const { return cmp(o) >= 0; }
    bool operator==(const ExtScalar& o) const { return cmp(o) == 0; }

    std::string str() const;

  private:
    explicit ExtScalar(Kind k) : kind_(k), fin_(0) {}
    Kind kind_;
    Scalar fin_;
};

ExtScalar min(const ExtScalar& a, const ExtScalar& b);
ExtScalar max(const ExtScalar& a, const ExtScalar& b);

// Open interval (lo, hi) of exponents q. Empty iff lo >= hi.
struct QInterval {
    ExtScalar lo;
    ExtScalar hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(ExtScalar l, ExtScalar h) : lo(std::move(l)), hi(std::move(h)) {}

    static QInterval empty_interval() { return QInterval(ExtScalar(0), ExtScalar(0)); }

    bool empty() const { return lo >= hi; }
    bool contains(const Scalar& q) const {
        return lo < ExtScalar(q) && ExtScalar(q) < hi;
    }
    QInterval intersect(const QInterval& o) const {
        return QInterval(max(lo, o.lo), min(hi, o.hi));
    }
    // Smallest interval containing both (used for nested candidate families).
    QInterval hull(const QInterval& o) const {
        if (empty()) return o;
        if (o.empty()) return *this;
        return QInterval(min(lo, o.lo), max(hi, o.hi));
    }
    bool same_as(const QInterval& o) const {
        if (empty() && o.empty()) return true;
        return lo == o.lo && hi == o.hi;
    }
    std::string str() const;
};

}  // namespace sobemb

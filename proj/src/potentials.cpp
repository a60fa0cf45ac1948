#include "sobemb/potentials.hpp"

#include <cmath>
#include <limits>

#include "sobemb/errors.hpp"
#include "sobemb/exponents.hpp"

namespace sobemb::potentials {

namespace {
const Scalar kZero(0);
const Scalar kOne(1);
}

Potential Potential::zero() { return Potential(); }

Potential Potential::power(const Scalar& coeff, const Scalar& exponent) {
    if (!(coeff > kZero)) throw InvalidSpec("power potential needs a positive coefficient");
    Potential p;
    p.kind_ = Kind::Power;
    p.params_ = {coeff, exponent};
    return p;
}

Potential Potential::exp_inv_r(const Scalar& b) {
    Potential p;
    p.kind_ = Kind::ExpInvR;
    p.params_ = {b};
    return p;
}

Potential Potential::exp_r(const Scalar& a) {
    Potential p;
    p.kind_ = Kind::ExpR;
    p.params_ = {a};
    return p;
}

Potential Potential::power_exp(const Scalar& d, const Scalar& b) {
    if (!(b > kZero)) throw InvalidSpec("damped power potential needs b > 0");
    Potential p;
    p.kind_ = Kind::PowerExp;
    p.params_ = {d, b};
    return p;
}

Potential Potential::truncated(Potential inner, const Scalar& support_radius, Side side) {
    if (!(support_radius > kZero)) throw InvalidSpec("support radius must be positive");
    if (inner.kind_ == Kind::Truncated || inner.kind_ == Kind::Sum)
        throw InvalidSpec("truncation applies to simple potentials only");
    Potential p;
    p.kind_ = Kind::Truncated;
    p.params_ = {support_radius};
    p.side_ = side;
    p.terms_.push_back(std::make_shared<const Potential>(std::move(inner)));
    return p;
}

Potential Potential::sum(Potential first, Potential second) {
    if (first.kind_ == Kind::Sum || second.kind_ == Kind::Sum)
        throw InvalidSpec("sums of more than two members are not supported");
    Potential p;
    p.kind_ = Kind::Sum;
    p.terms_.push_back(std::make_shared<const Potential>(std::move(first)));
    p.terms_.push_back(std::make_shared<const Potential>(std::move(second)));
    return p;
}

double Potential::eval(double r) const {
    switch (kind_) {
        case Kind::Zero: return 0.0;
        case Kind::Power: return params_[0].value() * std::pow(r, params_[1].value());
        case Kind::ExpInvR: return std::exp(params_[0].value() / r);
        case Kind::ExpR: return std::exp(params_[0].value() * r);
        case Kind::PowerExp:
            return std::pow(r, params_[0].value()) * std::exp(-params_[1].value() * r);
        case Kind::Truncated: {
            double R = params_[0].value();
            bool in = side_ == Side::Origin ? r <= R : r >= R;
            return in ? terms_[0]->eval(r) : 0.0;
        }
        default: return terms_[0]->eval(r) + terms_[1]->eval(r);
    }
}

double Potential::log_eval(double r) const {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    switch (kind_) {
        case Kind::Zero: return kNegInf;
        case Kind::Power:
            return std::log(params_[0].value()) + params_[1].value() * std::log(r);
        case Kind::ExpInvR: return params_[0].value() / r;
        case Kind::ExpR: return params_[0].value() * r;
        case Kind::PowerExp:
            return params_[0].value() * std::log(r) - params_[1].value() * r;
        case Kind::Truncated: {
            double R = params_[0].value();
            bool in = side_ == Side::Origin ? r <= R : r >= R;
            return in ? terms_[0]->log_eval(r) : kNegInf;
        }
        default: {
            double a = terms_[0]->log_eval(r), b = terms_[1]->log_eval(r);
            double hi = std::max(a, b), lo = std::min(a, b);
            if (hi == kNegInf) return kNegInf;
            return hi + std::log1p(std::exp(lo - hi));
        }
    }
}

Potential::Asym Potential::asym(Side side) const {
    switch (kind_) {
        case Kind::Zero: return {true, 0.0, kZero, kZero};
        case Kind::Power: return {false, params_[0].value(), params_[1], kZero};
        case Kind::ExpInvR:
            return side == Side::Origin ? Asym{false, 1.0, kZero, params_[0]}
                                        : Asym{false, 1.0, kZero, kZero};
        case Kind::ExpR:
            return side == Side::Origin ? Asym{false, 1.0, kZero, kZero}
                                        : Asym{false, 1.0, kZero, params_[0]};
        case Kind::PowerExp:
            return side == Side::Origin ? Asym{false, 1.0, params_[0], kZero}
                                        : Asym{false, 1.0, params_[0], -params_[1]};
        case Kind::Truncated:
            return side == side_ ? terms_[0]->asym(side) : Asym{true, 0.0, kZero, kZero};
        default: {
            Asym a = terms_[0]->asym(side);
            Asym b = terms_[1]->asym(side);
            if (a.zero) return b;
            if (b.zero) return a;
            int rate_cmp = a.rate.cmp(b.rate);
            // The larger exponential rate dominates on both sides (near the
            // origin the exponent is rate/r, near infinity it is rate*r).
            if (rate_cmp > 0) return a;
            if (rate_cmp < 0) return b;
            int pw_cmp = a.pw.cmp(b.pw);
            if (pw_cmp == 0) return {false, a.coeff + b.coeff, a.pw, a.rate};
            // Equal rates: near 0 the smaller power wins, near infinity the larger.
            bool a_wins = side == Side::Origin ? pw_cmp < 0 : pw_cmp > 0;
            return a_wins ? a : b;
        }
    }
}

namespace {

// Shared piece construction: the ratio K/(r^alpha V^beta) has exponential
// rate rK - beta*rV on the side; strictly negative rate means bounded for
// every alpha, zero rate defers to the power exponent, positive rate means
// no alpha works. The alpha bound (when the rate vanishes) is
// pK - beta*pV, an upper bound at the origin and a lower bound at infinity.
GrowthEnvelope build_envelope(const Potential& v, const Potential& k, Potential::Side side) {
    Potential::Asym ka = k.asym(side);
    if (ka.zero)
        throw UnsupportedCombination("the weight K must be positive on this side");
    GrowthEnvelope env;
    env.side = side;

    auto push_unbounded = [&env](Scalar lo, bool lo_open, Scalar hi, bool hi_open) {
        if (lo > hi || (lo == hi && (lo_open || hi_open))) return;
        env.pieces.push_back({lo, hi, lo_open, hi_open, true, kZero, kZero});
    };
    auto push_bounded = [&env](Scalar lo, Scalar hi, const Scalar& c0, const Scalar& c1) {
        if (lo > hi) return;
        env.pieces.push_back({lo, hi, false, false, false, c0, c1});
    };

    Potential::Asym va = v.asym(side);
    if (va.zero) {
        // Only beta = 0 is meaningful (V^0 = 1 by convention).
        if (ka.rate < kZero)
            push_unbounded(kZero, false, kZero, false);
        else if (ka.rate == kZero)
            push_bounded(kZero, kZero, ka.pw, kZero);
        return env;
    }

    const Scalar c0 = ka.pw;
    const Scalar c1 = -va.pw;
    const Scalar& rv = va.rate;
    const Scalar& rk = ka.rate;
    if (rv == kZero) {
        if (rk < kZero)
            push_unbounded(kZero, false, kOne, false);
        else if (rk == kZero)
            push_bounded(kZero, kOne, c0, c1);
        return env;
    }
    Scalar beta_star = rk / rv;
    if (rv > kZero) {
        // rate < 0 iff beta > beta_star
        push_bounded(max(kZero, beta_star), min(kOne, beta_star), c0, c1);
        if (beta_star < kOne)
            push_unbounded(max(kZero, beta_star), beta_star >= kZero, kOne, false);
    } else {
        // rate < 0 iff beta < beta_star
        push_bounded(max(kZero, beta_star), min(kOne, beta_star), c0, c1);
        if (beta_star > kZero)
            push_unbounded(kZero, false, min(kOne, beta_star), beta_star <= kOne);
    }
    return env;
}

}  // namespace

GrowthEnvelope envelope_origin(const Potential& v, const Potential& k) {
    return build_envelope(v, k, Potential::Side::Origin);
}

GrowthEnvelope envelope_infinity(const Potential& v, const Potential& k) {
    return build_envelope(v, k, Potential::Side::Infinity);
}

bool GrowthEnvelope::admissible(const Scalar& alpha, const Scalar& beta) const {
    auto bound = alpha_bound(beta);
    if (!bound) return false;
    if (!bound->finite()) return true;
    return side == Potential::Side::Origin ? alpha <= bound->fin() : alpha >= bound->fin();
}

std::optional<ExtScalar> GrowthEnvelope::alpha_bound(const Scalar& beta) const {
    std::optional<ExtScalar> best;
    for (const auto& p : pieces) {
        int lc = beta.cmp(p.beta_lo), hc = beta.cmp(p.beta_hi);
        bool in = (p.lo_open ? lc > 0 : lc >= 0) && (p.hi_open ? hc < 0 : hc <= 0);
        if (!in) continue;
        ExtScalar b = p.alpha_unbounded
                          ? (side == Potential::Side::Origin ? ExtScalar::pos_inf()
                                                             : ExtScalar::neg_inf())
                          : ExtScalar(p.c0 + p.c1 * beta);
        if (!best)
            best = b;
        else
            best = side == Potential::Side::Origin ? max(*best, b) : min(*best, b);
    }
    return best;
}

GammaCaps gamma_caps(const Potential& v) {
    GammaCaps caps;
    Potential::Asym o = v.asym(Potential::Side::Origin);
    if (!o.zero) {
        if (o.rate > kZero)
            caps.origin_cap = ExtScalar::pos_inf();
        else if (o.rate == kZero && -o.pw >= Scalar(2))
            caps.origin_cap = ExtScalar(-o.pw);
    }
    Potential::Asym i = v.asym(Potential::Side::Infinity);
    if (!i.zero) {
        if (i.rate > kZero)
            caps.infinity_floor = ExtScalar::neg_inf();
        else if (i.rate == kZero && -i.pw <= Scalar(2))
            caps.infinity_floor = ExtScalar(-i.pw);
    }
    return caps;
}

double log_ratio_sup(const Potential& v, const Potential& k, double alpha, double beta,
                     Potential::Side side) {
    const int kNodes = 400;
    const double t_lo = side == Potential::Side::Origin ? std::log(1e-80) : 0.0;
    const double t_hi = side == Potential::Side::Origin ? 0.0 : std::log(1e80);
    double sup = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kNodes; ++i) {
        double r = std::exp(t_lo + (t_hi - t_lo) * i / (kNodes - 1));
        double lv = beta == 0.0 ? 0.0 : beta * v.log_eval(r);
        double val = k.log_eval(r) - alpha * std::log(r) - lv;
        sup = std::max(sup, val);
    }
    return sup;
}

// ---------------------------------------------------------------------------
// Example catalog
// ---------------------------------------------------------------------------

namespace {

Scalar get(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw InvalidSpec("missing parameter '" + key + "'");
    return it->second;
}

int get_dim(const Params& p) {
    Scalar n = get(p, "N");
    if (!n.exact() || n.rat().den != 1 || n.rat().num < 3)
        throw InvalidSpec("N must be an integer >= 3");
    return static_cast<int>(n.rat().num);
}

QInterval open_iv(const Scalar& lo, const Scalar& hi) {
    return QInterval(ExtScalar(lo), ExtScalar(hi));
}

QInterval halfline(const Scalar& lo) { return QInterval(ExtScalar(lo), ExtScalar::pos_inf()); }

ExpectedVerdict with_single(QInterval q1, QInterval q2) {
    ExpectedVerdict e;
    e.single_q = q1.intersect(q2);
    e.q1 = std::move(q1);
    e.q2 = std::move(q2);
    return e;
}

std::vector<ExampleCase> build_catalog() {
    std::vector<ExampleCase> cat;

    // Inverse-power pair: V = r^{-a}, K = r^{1-a}, a <= 2.
    cat.push_back(ExampleCase{
        "inverse_power",
        "V=r^-a with K=r^(1-a): origin interval from growth, infinity "
        "threshold from the decay of V (a <= 2)",
        {{"a", Scalar(1)}, {"N", Scalar(3)}},
        [](const Params& p) {
            get_dim(p);
            if (get(p, "a") > Scalar(2)) throw InvalidSpec("requires a <= 2");
        },
        [](const Params& p) { return Potential::power(kOne, -get(p, "a")); },
        [](const Params& p) { return Potential::power(kOne, kOne - get(p, "a")); },
        [](const Params& p) {
            Dim n(get_dim(p));
            Scalar a = get(p, "a");
            Scalar q1_hi = Scalar(2) * (n.N() + kOne - a) / Scalar(n.n() - 2);
            Scalar q2_lo = Scalar(2) * (Scalar(2 * n.n()) - a) /
                           (Scalar(2 * n.n() - 2) - a);
            return with_single(open_iv(kOne, q1_hi), halfline(q2_lo));
        }});

    // Pure weight: V = 0, K = r^d.
    cat.push_back(ExampleCase{
        "zero_potential",
        "V=0 with K=r^d: both sides are governed by the single critical "
        "exponent 2(d+N)/(N-2)",
        {{"d", Scalar(1)}, {"N", Scalar(3)}},
        [](const Params& p) { get_dim(p); },
        [](const Params&) { return Potential::zero(); },
        [](const Params& p) { return Potential::power(kOne, get(p, "d")); },
        [](const Params& p) {
            Dim n(get_dim(p));
            Scalar qs = exponents::q_star(get(p, "d"), kZero, n);
            return with_single(open_iv(kOne, qs), halfline(max(kOne, qs)));
        }});

    // Exponentially decaying potential: V = e^{-a r}, K = r^d (b = 0) or
    // K = r^d e^{-b r} (b > 0).
    cat.push_back(ExampleCase{
        "exp_decay",
        "V=e^(-ar) with K=r^d or r^d e^(-br): an exponentially small weight "
        "at infinity removes the upper growth constraint there",
        {{"a", Scalar(1)}, {"d", Scalar(1)}, {"b", Scalar(0)}, {"N", Scalar(3)}},
        [](const Params& p) {
            get_dim(p);
            if (!(get(p, "a") > kZero)) throw InvalidSpec("requires a > 0");
            if (get(p, "b") < kZero) throw InvalidSpec("requires b >= 0");
        },
        [](const Params& p) { return Potential::exp_r(-get(p, "a")); },
        [](const Params& p) {
            Scalar b = get(p, "b");
            if (b > kZero) return Potential::power_exp(get(p, "d"), b);
            return Potential::power(kOne, get(p, "d"));
        },
        [](const Params& p) {
            Dim n(get_dim(p));
            Scalar qs = exponents::q_star(get(p, "d"), kZero, n);
            QInterval q2 = get(p, "b") > kZero ? halfline(kOne) : halfline(max(kOne, qs));
            return with_single(open_iv(kOne, qs), std::move(q2));
        }});

    // Exponentially singular potential: V = e^{1/r}, K = e^{b/r}, 0 < b <= 1.
    // variant 0: V itself; 1: V cut off outside r=1; 2: the cutoff plus an
    // r^N tail.
    cat.push_back(ExampleCase{
        "exp_singular",
        "V=e^(1/r) with K=e^(b/r) and truncated variants: the singular decay "
        "cap is unbounded, so the origin interval is a full half-line",
        {{"b", Scalar(Rat(1, 2))}, {"variant", Scalar(0)}, {"N", Scalar(3)}},
        [](const Params& p) {
            get_dim(p);
            Scalar b = get(p, "b");
            if (!(b > kZero) || b > kOne) throw InvalidSpec("requires 0 < b <= 1");
            Scalar v = get(p, "variant");
            if (v != kZero && v != kOne && v != Scalar(2))
                throw InvalidSpec("variant must be 0, 1 or 2");
        },
        [](const Params& p) {
            Scalar v = get(p, "variant");
            if (v == kZero) return Potential::exp_inv_r(kOne);
            Potential core =
                Potential::truncated(Potential::exp_inv_r(kOne), kOne,
                                     Potential::Side::Origin);
            if (v == kOne) return core;
            Dim n(get_dim(p));
            return Potential::sum(std::move(core),
                                  Potential::truncated(Potential::power(kOne, n.N()), kOne,
                                                       Potential::Side::Infinity));
        },
        [](const Params& p) { return Potential::exp_inv_r(get(p, "b")); },
        [](const Params& p) {
            Dim n(get_dim(p));
            Scalar b = get(p, "b");
            Scalar v = get(p, "variant");
            QInterval q1 = halfline(max(kOne, Scalar(2) * b));
            QInterval q2 = v == kZero   ? halfline(Scalar(2))
                           : v == kOne ? halfline(n.two_star())
                                       : halfline(kOne);
            return with_single(std::move(q1), std::move(q2));
        }});

    // Strongly singular power potential: V = r^a with -2(N-1) < a < -N,
    // K ~ r^{b0} near 0 and r^b near infinity.
    cat.push_back(ExampleCase{
        "singular_power",
        "V=r^a (-2(N-1)<a<-N) with a two-sided power weight: the origin side "
        "uses the full region of admissible (alpha, q)",
        {{"a", Scalar(Rat(-7, 2))}, {"b0", Scalar(-3)}, {"b", Scalar(-5)}, {"N", Scalar(3)}},
        [](const Params& p) {
            int N = get_dim(p);
            Scalar a = get(p, "a");
            if (!(Scalar(-2 * (N - 1)) < a && a < Scalar(-N)))
                throw InvalidSpec("requires -2(N-1) < a < -N");
            if (!(get(p, "b0") > a)) throw InvalidSpec("requires b0 > a");
        },
        [](const Params& p) { return Potential::power(kOne, get(p, "a")); },
        [](const Params& p) {
            return Potential::sum(
                Potential::truncated(Potential::power(kOne, get(p, "b0")), kOne,
                                     Potential::Side::Origin),
                Potential::truncated(Potential::power(kOne, get(p, "b")), kOne,
                                     Potential::Side::Infinity));
        },
        [](const Params& p) {
            Dim n(get_dim(p));
            Scalar a = get(p, "a"), b0 = get(p, "b0"), b = get(p, "b");
            Scalar N = n.N();
            Scalar lo1 = max(kOne, Scalar(2) * (N + b0) / (N + a));
            Scalar hi1 = Scalar(2) * (Scalar(2 * n.n() - 2) + Scalar(2) * b0 - a) /
                         (Scalar(2 * n.n() - 2) + a);
            Scalar lo2 = max(kOne, Scalar(2) * (N + b) / Scalar(n.n() - 2));
            return with_single(open_iv(lo1, hi1), halfline(lo2));
        }});

    return cat;
}

}  // namespace

const std::vector<ExampleCase>& example_catalog() {
    static const std::vector<ExampleCase> cat = build_catalog();
    return cat;
}

const ExampleCase& find_example(const std::string& name) {
    for (const auto& e : example_catalog())
        if (e.name == name) return e;
    throw InvalidSpec("unknown example '" + name + "'");
}

Params merge_params(const ExampleCase& ex, const Params& overrides) {
    Params out = ex.defaults;
    for (const auto& [key, val] : overrides) {
        if (!out.count(key))
            throw InvalidSpec("example '" + ex.name + "' has no parameter '" + key + "'");
        out[key] = val;
    }
    ex.validate(out);
    return out;
}

}  // namespace sobemb::potentials

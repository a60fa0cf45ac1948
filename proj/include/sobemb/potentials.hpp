#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sobemb/interval.hpp"
#include "sobemb/scalar.hpp"

namespace sobemb::potentials {

// Closed symbolic family of radial potentials. Each member has an exact
// leading-order form on each side (a power times an exponential), so
// boundedness of ratios near 0 and near infinity is decidable symbolically.
class Potential {
  public:
    enum class Kind { Zero, Power, ExpInvR, ExpR, PowerExp, Truncated, Sum };
    enum class Side { Origin, Infinity };

    static Potential zero();
    // coeff * r^exponent, coeff > 0
    static Potential power(const Scalar& coeff, const Scalar& exponent);
    // e^{b/r}
    static Potential exp_inv_r(const Scalar& b);
    // e^{a*r}
    static Potential exp_r(const Scalar& a);
    // r^d * e^{-b*r}, b > 0
    static Potential power_exp(const Scalar& d, const Scalar& b);
    // inner on its support side ((0,R] for Origin, [R,inf) for Infinity), 0 elsewhere
    static Potential truncated(Potential inner, const Scalar& support_radius, Side side);
    // sum of exactly two members (nested sums are rejected)
    static Potential sum(Potential first, Potential second);

    Kind kind() const { return kind_; }
    const std::vector<Scalar>& params() const { return params_; }
    Side trunc_side() const { return side_; }
    const Potential& term(std::size_t i) const { return *terms_.at(i); }
    std::size_t term_count() const { return terms_.size(); }

    // Pointwise value at r > 0; may overflow to +inf for steep exponentials.
    double eval(double r) const;
    // log(eval(r)) computed without overflow; -inf where the value is 0.
    double log_eval(double r) const;

    // Leading-order form on one side: coeff * r^pw * e^{rate/r} near the
    // origin, coeff * r^pw * e^{rate*r} near infinity; or identically zero.
    struct Asym {
        bool zero;
        double coeff;
        Scalar pw;
        Scalar rate;
    };
    Asym asym(Side side) const;

  private:
    Potential() : kind_(Kind::Zero) {}
    Kind kind_;
    std::vector<Scalar> params_;
    Side side_ = Side::Origin;
    std::vector<std::shared_ptr<const Potential>> terms_;
};

// Admissible growth pairs (alpha, beta) for one side, as a piecewise-affine
// envelope over beta in [0,1]: per piece either every alpha is admissible or
// alpha is bounded by the affine map c0 + c1*beta (an upper bound at the
// origin, a lower bound at infinity).
struct EnvelopePiece {
    Scalar beta_lo;
    Scalar beta_hi;
    bool lo_open = false;
    bool hi_open = false;
    bool alpha_unbounded = false;
    Scalar c0;
    Scalar c1;
};

struct GrowthEnvelope {
    Potential::Side side;
    std::vector<EnvelopePiece> pieces;

    bool admissible(const Scalar& alpha, const Scalar& beta) const;
    // The extreme admissible alpha at this beta (largest at the origin,
    // smallest at infinity); PosInf/NegInf when every alpha is admissible;
    // nullopt when this beta admits no alpha at all.
    std::optional<ExtScalar> alpha_bound(const Scalar& beta) const;
    bool empty() const { return pieces.empty(); }
};

// Decide which (alpha, beta) make K(r) / (r^alpha V(r)^beta) essentially
// bounded near the side. Convention: V^0 = 1 even where V vanishes.
// Throws UnsupportedCombination when K vanishes identically on that side.
GrowthEnvelope envelope_origin(const Potential& v, const Potential& k);
GrowthEnvelope envelope_infinity(const Potential& v, const Potential& k);

// Admissible decay exponents for V: origin_cap is the largest gamma >= 2 with
// essinf r^gamma V > 0 near 0 (PosInf allowed); infinity_floor the smallest
// gamma <= 2 with essinf r^gamma V > 0 near infinity (NegInf allowed).
struct GammaCaps {
    std::optional<ExtScalar> origin_cap;
    std::optional<ExtScalar> infinity_floor;
};
GammaCaps gamma_caps(const Potential& v);

// Numeric spot-check oracle (tests only): sup over a wide log grid of
// log(K(r)) - alpha*log(r) - beta*log(V(r)), on r in [1e-80, 1] for the
// origin side and [1, 1e80] for the infinity side.
double log_ratio_sup(const Potential& v, const Potential& k, double alpha, double beta,
                     Potential::Side side);

// Closed-form prediction of the admissible exponent intervals for an example.
struct ExpectedVerdict {
    QInterval q1;
    QInterval q2;
    QInterval single_q;
};

using Params = std::map<std::string, Scalar>;

struct ExampleCase {
    std::string name;
    std::string summary;
    Params defaults;  // includes "N"
    std::function<void(const Params&)> validate;
    std::function<Potential(const Params&)> make_v;
    std::function<Potential(const Params&)> make_k;
    std::function<ExpectedVerdict(const Params&)> expected;
};

// The five worked model problems shipped with the library.
const std::vector<ExampleCase>& example_catalog();

const ExampleCase& find_example(const std::string& name);

// Defaults merged with overrides; unknown keys are rejected.
Params merge_params(const ExampleCase& ex, const Params& overrides);

}  // namespace sobemb::potentials

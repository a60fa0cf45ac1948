#include "sobemb/region.hpp"

#include <algorithm>
#include <cmath>

#include "sobemb/errors.hpp"
#include "sobemb/exponents.hpp"

namespace sobemb::region {

namespace exp = sobemb::exponents;

std::string case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::GammaBelowN: return "gamma_below_n";
        case CaseTag::GammaEqN: return "gamma_eq_n";
        case CaseTag::GammaBetween: return "gamma_between";
        case CaseTag::GammaEq2Nm2: return "gamma_eq_2nm2";
        default: return "gamma_above";
    }
}

RegionSpec RegionSpec::make(const Scalar& beta, const Scalar& gamma, const Dim& n) {
    if (beta > Scalar(1)) throw InvalidSpec("region requires beta <= 1");
    if (gamma < Scalar(2)) throw InvalidSpec("region requires gamma >= 2");
    Scalar N = n.N();
    Scalar two_nm2(2 * (n.n() - 1));
    CaseTag tag;
    if (gamma < N)
        tag = CaseTag::GammaBelowN;
    else if (gamma == N)
        tag = CaseTag::GammaEqN;
    else if (gamma < two_nm2)
        tag = CaseTag::GammaBetween;
    else if (gamma == two_nm2)
        tag = CaseTag::GammaEq2Nm2;
    else
        tag = CaseTag::GammaAbove;
    return RegionSpec{beta, gamma, n, tag};
}

QInterval slice_interval(const Scalar& alpha, const RegionSpec& spec) {
    const Scalar& b = spec.beta;
    const Scalar& g = spec.gamma;
    const Dim& n = spec.n;
    Scalar floor_q = max(Scalar(1), Scalar(2) * b);
    exp::AlphaThresholds th = exp::alpha_thresholds(b, g, n);

    switch (spec.case_tag) {
        case CaseTag::GammaBelowN: {
            Scalar hi = min(exp::q_sub(alpha, b, g, n), exp::q_subsub(alpha, b, g, n));
            return QInterval(floor_q, hi);
        }
        case CaseTag::GammaEqN: {
            if (alpha <= th.alpha2) return QInterval::empty_interval();
            return QInterval(floor_q, exp::q_subsub(alpha, b, g, n));
        }
        case CaseTag::GammaBetween: {
            Scalar lo = max(floor_q, exp::q_sub(alpha, b, g, n));
            return QInterval(lo, exp::q_subsub(alpha, b, g, n));
        }
        case CaseTag::GammaEq2Nm2: {
            if (alpha <= th.alpha1) return QInterval::empty_interval();
            Scalar lo = max(floor_q, exp::q_sub(alpha, b, g, n));
            return QInterval(lo, ExtScalar::pos_inf());
        }
        default: {  // GammaAbove
            Scalar lo = max(max(floor_q, exp::q_sub(alpha, b, g, n)),
                            exp::q_subsub(alpha, b, g, n));
            return QInterval(lo, ExtScalar::pos_inf());
        }
    }
}

bool membership(const Scalar& alpha, const Scalar& q, const RegionSpec& spec) {
    return slice_interval(alpha, spec).contains(q);
}

namespace {

// Names the constraints active (equal to `endpoint` within Scalar comparison)
// at one slice endpoint.
std::string endpoint_label(const Scalar& alpha, const Scalar& endpoint, const RegionSpec& spec,
                           bool lower) {
    std::vector<std::string> hits;
    Scalar floor_q = max(Scalar(1), Scalar(2) * spec.beta);
    if (lower && endpoint == floor_q) hits.push_back("q_floor");
    if (spec.case_tag != CaseTag::GammaEqN &&
        exp::q_sub(alpha, spec.beta, spec.gamma, spec.n) == endpoint)
        hits.push_back("q_sub");
    if (spec.case_tag != CaseTag::GammaEq2Nm2 &&
        exp::q_subsub(alpha, spec.beta, spec.gamma, spec.n) == endpoint)
        hits.push_back("q_subsub");
    if (hits.empty()) return lower ? "lower" : "upper";
    std::string out = hits[0];
    for (std::size_t i = 1; i < hits.size(); ++i) out += "==" + hits[i];
    return out;
}

}  // namespace

std::vector<BoundaryCurve> boundary_export(const RegionSpec& spec,
                                           std::pair<Scalar, Scalar> alpha_range,
                                           int samples) {
    if (!(alpha_range.first < alpha_range.second))
        throw EmptyRange("alpha range is degenerate");
    if (samples < 2) throw PreconditionViolated("need at least 2 samples");

    const double alo = alpha_range.first.value();
    const double ahi = alpha_range.second.value();
    std::vector<BoundaryCurve> curves;
    BoundaryCurve lower{"lower_0", {}};
    BoundaryCurve upper{"upper_0", {}};
    int lower_id = 0, upper_id = 0;
    double q_plot_max = 4.0;  // grows with the data; used to cap infinite walls

    auto flush = [&curves](BoundaryCurve& c, int& id, const char* stem) {
        if (!c.vertices.empty()) {
            curves.push_back(c);
            ++id;
        }
        c = BoundaryCurve{std::string(stem) + "_" + std::to_string(id), {}};
    };

    for (int i = 0; i < samples; ++i) {
        double a = alo + (ahi - alo) * i / (samples - 1);
        Scalar alpha = Scalar::from_double(a);
        QInterval slice = slice_interval(alpha, spec);
        if (slice.empty()) {
            flush(lower, lower_id, "lower");
            flush(upper, upper_id, "upper");
            continue;
        }
        Scalar lo = slice.lo.fin();
        lower.vertices.push_back({a, lo.value(), endpoint_label(alpha, lo, spec, true)});
        q_plot_max = std::max(q_plot_max, lo.value() + 1.0);
        if (slice.hi.finite()) {
            Scalar hi = slice.hi.fin();
            upper.vertices.push_back({a, hi.value(), endpoint_label(alpha, hi, spec, false)});
            q_plot_max = std::max(q_plot_max, hi.value());
        } else {
            flush(upper, upper_id, "upper");
        }
    }
    flush(lower, lower_id, "lower");
    flush(upper, upper_id, "upper");

    // Vertical boundary pieces at the alpha thresholds of the two equality
    // cases: the slice jumps from empty to an interval of positive height.
    exp::AlphaThresholds th = exp::alpha_thresholds(spec.beta, spec.gamma, spec.n);
    Scalar wall_alpha(0);
    std::string wall_label;
    bool have_wall = false;
    if (spec.case_tag == CaseTag::GammaEqN) {
        wall_alpha = th.alpha2;
        wall_label = "alpha2_wall";
        have_wall = true;
    } else if (spec.case_tag == CaseTag::GammaEq2Nm2) {
        wall_alpha = th.alpha1;
        wall_label = "alpha1_wall";
        have_wall = true;
    }
    if (have_wall && wall_alpha.value() > alo && wall_alpha.value() < ahi) {
        // Just right of the wall, the slice is (max{1,2beta}, ~2) or
        // (max{1,2beta,q_*}, inf); both endpoints tend to the corner values
        // max{1,2beta} and 2 as alpha approaches the threshold.
        double bottom = max(Scalar(1), Scalar(2) * spec.beta).value();
        double top = 2.0;
        if (spec.case_tag == CaseTag::GammaEq2Nm2) top = q_plot_max;
        if (top > bottom + 1e-12) {
            BoundaryCurve wall{"wall", {}};
            int wall_pts = std::min(samples, 33);
            // Trim the corner points: the offset test only holds strictly
            // between the corners.
            for (int i = 0; i < wall_pts; ++i) {
                double t = (i + 1.0) / (wall_pts + 1.0);
                wall.vertices.push_back({wall_alpha.value(), bottom + (top - bottom) * t,
                                         wall_label});
            }
            curves.push_back(std::move(wall));
        }
    }
    return curves;
}

XiSearch XiSearch::for_beta(double beta, int grid_points, double margin) {
    if (beta > 1.0) throw InvalidSpec("xi window requires beta <= 1");
    if (grid_points < 1000) throw InvalidSpec("xi grid needs at least 1000 points");
    if (!(margin > 0.0)) throw InvalidSpec("xi search margin must be positive");
    XiSearch s;
    s.xi_lo = std::max(0.0, (1.0 - 2.0 * beta) / 2.0);
    s.xi_hi = 1.0 - beta;
    s.grid_points = grid_points;
    s.margin = margin;
    return s;
}

bool xi_feasible_brute(double alpha, double beta, double gamma, double q,
                       const XiSearch& search, const Dim& n) {
    if (!(gamma > 2.0)) throw PreconditionViolated("xi oracle requires gamma > 2");
    if (beta > 1.0) throw PreconditionViolated("xi oracle requires beta <= 1");
    const double N = n.n();
    const double wlo = search.xi_lo, whi = search.xi_hi;

    auto ok = [&](double xi) {
        if (xi < wlo || xi > whi) return false;
        double bx = beta + xi;
        if (!(q > 2.0 * bx)) return false;
        double num = 4.0 * (alpha + xi * gamma) + 4.0 * N - 2.0 * (gamma + 2.0) * bx;
        return q * (2.0 * N - 2.0 - gamma) < num;
    };

    for (int i = 0; i < search.grid_points; ++i) {
        double xi = wlo + (whi - wlo) * i / std::max(1, search.grid_points - 1);
        if (ok(xi)) return true;
    }
    if (ok(wlo) || ok(whi)) return true;
    // Exact interior candidates: the exponent that balances the power weight,
    if (gamma != N && ok((alpha + (1.0 - beta) * N) / (N - gamma))) return true;
    // and the midpoint of the feasible xi-subinterval of the unified system
    // (the system is linear in xi with positive slope 2(gamma-2) on its
    // second inequality, so the feasible set is the window cut by one lower
    // and one upper bound; the midpoint is strictly feasible when nonempty).
    double L = (q * (2.0 * N - 2.0 - gamma) - (4.0 * alpha + 4.0 * N - 2.0 * (gamma + 2.0) * beta)) /
               (2.0 * (gamma - 2.0));
    double U = (q - 2.0 * beta) / 2.0;
    double lo2 = std::max(L, wlo), hi2 = std::min(U, whi);
    if (lo2 < hi2 && ok(0.5 * (lo2 + hi2))) return true;
    return false;
}

double boundary_distance(double alpha, double q, const RegionSpec& spec) {
    const double N = spec.n.n();
    const double b = spec.beta.value();
    const double g = spec.gamma.value();
    const double floor_q = std::max(1.0, 2.0 * b);
    double d = std::fabs(q - floor_q);
    auto acc = [&d](double x) { d = std::min(d, std::fabs(x)); };

    const bool has_qsub = spec.case_tag != CaseTag::GammaEqN;
    const bool has_qss = spec.case_tag != CaseTag::GammaEq2Nm2;
    if (has_qsub) acc(q - 2.0 * (alpha - g * b + N) / (N - g));
    if (has_qss) acc(q - 2.0 * (2.0 * alpha + (1.0 - 2.0 * b) * g + 2.0 * (N - 1.0)) /
                             (2.0 * (N - 1.0) - g));
    if (spec.case_tag == CaseTag::GammaEqN) acc(alpha + (1.0 - b) * N);
    if (spec.case_tag == CaseTag::GammaEq2Nm2) acc(alpha + (1.0 - b) * g);
    return d;
}

}  // namespace sobemb::region

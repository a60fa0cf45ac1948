#include "sobemb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sobemb/errors.hpp"

namespace sobemb::numerics {

namespace pot = sobemb::potentials;

namespace {

constexpr double kHoldsTol = 1e-9;
const double kInf = std::numeric_limits<double>::infinity();

// Composite trapezoid in the log coordinate: int f(r) dr over consecutive
// nodes, where f carries every weight except dr itself. Throws on overflow.
double quad(const std::vector<double>& r, const std::vector<double>& f) {
    double acc = 0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        double dt = std::log(r[i + 1] / r[i]);
        acc += dt * (f[i] * r[i] + f[i + 1] * r[i + 1]) / 2.0;
    }
    if (!std::isfinite(acc)) throw NonIntegrable("quadrature overflow");
    return acc;
}

// Product that treats 0 * anything as 0, so that a singular weight outside
// the support of the profile does not poison the quadrature.
double safe_mul(double factor, double weight) {
    return factor == 0.0 ? 0.0 : factor * weight;
}

std::vector<std::size_t> nodes_in(const RadialGrid& g, double r_lo, double r_hi) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.nodes[i] >= r_lo && g.nodes[i] <= r_hi) idx.push_back(i);
    return idx;
}

// omega_{N-1} * int K |u|^p |h| r^{N-1} dr restricted to the given nodes
// (h may be null for a plain |u|^p integral).
double weighted_integral(const RadialFunction& u, const RadialFunction* h,
                         const pot::Potential& k, double p,
                         const std::vector<std::size_t>& idx, const Dim& n) {
    if (idx.size() < 2) return 0.0;
    std::vector<double> r, f;
    r.reserve(idx.size());
    f.reserve(idx.size());
    for (std::size_t i : idx) {
        double rr = u.grid().nodes[i];
        double uu = std::pow(std::fabs(u.values()[i]), p);
        if (h != nullptr) uu = safe_mul(uu, std::fabs(h->values()[i]));
        r.push_back(rr);
        f.push_back(safe_mul(uu, k.eval(rr) * std::pow(rr, n.n() - 1)));
    }
    return sphere_area(n) * quad(r, f);
}

}  // namespace

RadialGrid RadialGrid::log_spaced(double r_lo, double r_hi, int count) {
    if (!(r_lo > 0) || !(r_hi > r_lo))
        throw PreconditionViolated("log_spaced needs 0 < r_lo < r_hi");
    if (count < 64) throw PreconditionViolated("log_spaced needs at least 64 nodes");
    RadialGrid g;
    g.nodes.resize(static_cast<std::size_t>(count));
    double t_lo = std::log(r_lo), t_hi = std::log(r_hi);
    for (int i = 0; i < count; ++i)
        g.nodes[static_cast<std::size_t>(i)] =
            std::exp(t_lo + (t_hi - t_lo) * i / (count - 1));
    g.nodes.front() = r_lo;
    g.nodes.back() = r_hi;
    return g;
}

const RadialGrid& default_grid() {
    static const RadialGrid g = RadialGrid::log_spaced(1e-6, 1e3, 4096);
    return g;
}

RadialFunction RadialFunction::sample(const RadialGrid& grid,
                                      const std::function<double(double)>& f) {
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid.nodes[i]);
    std::vector<double> der(grid.size(), 0.0);
    const auto& r = grid.nodes;
    auto slope = [&](std::size_t a, std::size_t b, std::size_t at) {
        return (vals[b] - vals[a]) / std::log(r[b] / r[a]) / r[at];
    };
    if (grid.size() >= 2) {
        der[0] = slope(0, 1, 0);
        der[grid.size() - 1] = slope(grid.size() - 2, grid.size() - 1, grid.size() - 1);
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) der[i] = slope(i - 1, i + 1, i);
    }
    return RadialFunction(grid, std::move(vals), std::move(der));
}

RadialFunction RadialFunction::sample_with_derivative(
    const RadialGrid& grid, const std::function<double(double)>& f,
    const std::function<double(double)>& df) {
    std::vector<double> vals(grid.size()), der(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        vals[i] = f(grid.nodes[i]);
        der[i] = df(grid.nodes[i]);
    }
    return RadialFunction(grid, std::move(vals), std::move(der));
}

bool RadialFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double RadialFunction::support_radius() const {
    for (std::size_t i = values_.size(); i > 0; --i)
        if (values_[i - 1] != 0.0) return grid_.nodes[i - 1];
    return 0.0;
}

BumpFamily BumpFamily::geometric(double s_lo, double ratio, int count) {
    if (!(s_lo > 0) || !(ratio > 0) || count < 1)
        throw PreconditionViolated("geometric family needs s_lo > 0, ratio > 0, count >= 1");
    BumpFamily f;
    double s = s_lo;
    for (int i = 0; i < count; ++i, s *= ratio) f.scales.push_back(s);
    return f;
}

double BumpFamily::profile(double t) {
    if (t <= 0.0 || t >= 2.0) return 0.0;
    double w = 1.0 - (t - 1.0) * (t - 1.0);
    return std::exp(-1.0 / w);
}

double BumpFamily::profile_derivative(double t) {
    if (t <= 0.0 || t >= 2.0) return 0.0;
    double w = 1.0 - (t - 1.0) * (t - 1.0);
    return profile(t) * (-2.0 * (t - 1.0)) / (w * w);
}

RadialFunction BumpFamily::member(const RadialGrid& grid, std::size_t i, const Dim& n) const {
    double s = scales.at(i);
    double amp = std::pow(s, -(n.n() - 2) / 2.0);
    return RadialFunction::sample(grid, [s, amp](double r) { return amp * profile(r / s); });
}

double snap_scale(const RadialGrid& grid, double s) {
    double dt = std::log(grid.ratio());
    double k = std::round(std::log(s / grid.nodes[0]) / dt);
    return grid.nodes[0] * std::exp(k * dt);
}

double sphere_area(const Dim& n) {
    return 2.0 * std::exp(0.5 * n.n() * std::log(M_PI) - std::lgamma(n.n() / 2.0));
}

double sharp_sobolev_constant(const Dim& n) {
    double N = n.n();
    return std::exp((std::lgamma(N) - std::lgamma(N / 2.0)) / N) /
           std::sqrt(M_PI * N * (N - 2.0));
}

double ni_constant_estimate(const Dim& n) {
    BumpFamily corpus = BumpFamily::geometric(0.125, 2.0, 7);
    double sup = 0;
    for (std::size_t i = 0; i < corpus.scales.size(); ++i) {
        RadialFunction u = corpus.member(default_grid(), i, n);
        sup = std::max(sup, pointwise_ratio(u, PointwiseMode::ni(), n));
    }
    return sup;
}

double h1v_norm(const RadialFunction& u, const pot::Potential& v, const Dim& n) {
    const auto& r = u.grid().nodes;
    std::vector<double> f(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        double du = u.derivative()[i];
        double uu = u.values()[i];
        double integrand = du * du + safe_mul(uu * uu, v.eval(r[i]));
        f[i] = safe_mul(integrand, std::pow(r[i], n.n() - 1));
        if (!std::isfinite(f[i])) throw NonIntegrable("potential overflows inside the support");
    }
    return std::sqrt(sphere_area(n) * quad(r, f));
}

double weighted_lq(const RadialFunction& u, const pot::Potential& k, double q, double r_lo,
                   double r_hi, const Dim& n) {
    if (!(q > 1)) throw PreconditionViolated("weighted_lq needs q > 1");
    auto idx = nodes_in(u.grid(), r_lo, r_hi);
    return weighted_integral(u, nullptr, k, q, idx, n);
}

double weighted_mixed(const RadialFunction& u, const RadialFunction& h, const pot::Potential& k,
                      double q, double r_lo, double r_hi, const Dim& n) {
    if (!(q > 1)) throw PreconditionViolated("weighted_mixed needs q > 1");
    if (u.grid().nodes != h.grid().nodes)
        throw PreconditionViolated("weighted_mixed needs u and h on the same grid");
    auto idx = nodes_in(u.grid(), r_lo, r_hi);
    return weighted_integral(u, &h, k, q - 1, idx, n);
}

double s_lower_bound(double q, double R, pot::Potential::Side side, const pot::Potential& v,
                     const pot::Potential& k, const BumpFamily& family, const RadialGrid& grid,
                     const Dim& n) {
    if (!(R > 0)) throw PreconditionViolated("s_lower_bound needs R > 0");
    if (family.scales.empty()) throw PreconditionViolated("s_lower_bound needs a nonempty family");
    double best = 0;
    for (std::size_t i = 0; i < family.scales.size(); ++i) {
        RadialFunction u = family.member(grid, i, n);
        double norm = h1v_norm(u, v, n);
        if (norm == 0) continue;
        double r_lo = side == pot::Potential::Side::Origin ? 0.0 : R;
        double r_hi = side == pot::Potential::Side::Origin ? R : kInf;
        double raw = weighted_lq(u, k, q, r_lo, r_hi, n);
        best = std::max(best, raw / std::pow(norm, q));
    }
    return best;
}

double decay_slope_fit(const std::vector<double>& radii, const std::vector<double>& values) {
    if (radii.size() != values.size() || radii.size() < 4)
        throw PreconditionViolated("decay_slope_fit needs >= 4 matched points");
    std::vector<double> x, y;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(values[i] > 0) || !(radii[i] > 0))
            throw DegenerateFit("decay_slope_fit needs positive radii and values");
        x.push_back(std::log(radii[i]));
        y.push_back(std::log(values[i]));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw DegenerateFit("decay_slope_fit needs distinct radii");
    return sxy / sxx;
}

double pointwise_ratio(const RadialFunction& u, const PointwiseMode& mode, const Dim& n) {
    if (u.is_zero()) throw ZeroFunction("pointwise_ratio needs a nonzero profile");
    double N = n.n();

    pot::Potential v = pot::Potential::zero();
    if (mode.kind != PointwiseMode::Kind::Ni) {
        if (!(mode.lambda > 0)) throw PreconditionViolated("pointwise_ratio needs lambda > 0");
        v = pot::Potential::power(Scalar::from_double(mode.lambda),
                                  Scalar::from_double(-mode.gamma));
    }
    if (mode.kind == PointwiseMode::Kind::Origin &&
        u.support_radius() > mode.radius * (1 + 1e-12))
        throw PreconditionViolated("origin mode needs support inside the ball");

    double norm = h1v_norm(u, v, n);
    if (norm == 0) throw ZeroFunction("pointwise_ratio needs a nonzero norm");

    double sup = 0;
    for (std::size_t i = 0; i < u.grid().size(); ++i) {
        double r = u.grid().nodes[i];
        double w = 0;
        switch (mode.kind) {
            case PointwiseMode::Kind::Ni:
                w = std::pow(r, (N - 2) / 2.0);
                break;
            case PointwiseMode::Kind::Infinity:
                if (!(r > mode.radius)) continue;
                w = std::pow(mode.lambda, 0.25) * std::pow(r, (2 * (N - 1) - mode.gamma) / 4.0);
                break;
            case PointwiseMode::Kind::Origin: {
                if (!(r < mode.radius)) continue;
                double c = std::pow(mode.lambda, -0.5) +
                           std::pow(mode.radius, (mode.gamma - 2) / 2.0) / mode.lambda;
                w = std::pow(r, (2 * N - 2 - mode.gamma) / 4.0) / std::sqrt(c);
                break;
            }
        }
        sup = std::max(sup, safe_mul(std::fabs(u.values()[i]), w));
    }
    return sup / norm;
}

InequalityReport lemma_omega_check(const RadialFunction& u, const RadialFunction& h,
                                   const OmegaCheckInput& in, const pot::Potential& v,
                                   const pot::Potential& k, const Dim& n) {
    double beta = in.beta, q = in.q, alpha = in.alpha, m = in.m, nu = in.nu;
    if (beta == 1.0 && q <= 2.0)
        throw BranchDomain("the beta = 1 branch needs q > 2");
    if (beta < 0 || beta > 1) throw PreconditionViolated("beta must lie in [0,1]");
    if (!(q > std::max(1.0, 2 * beta)))
        throw PreconditionViolated("needs q > max{1, 2 beta}");
    auto idx = nodes_in(u.grid(), in.r_lo, in.r_hi);
    if (idx.size() < 2) throw PreconditionViolated("empty annulus");

    double N = n.n();
    double lambda_cap = 0;
    for (std::size_t i : idx) {
        double r = u.grid().nodes[i];
        if (std::fabs(u.values()[i]) > m * std::pow(r, -nu) * (1 + 1e-12))
            throw PreconditionViolated("pointwise envelope |u| <= m r^{-nu} fails");
        double denom = std::pow(r, alpha) * std::pow(v.eval(r), beta);
        lambda_cap = std::max(lambda_cap, k.eval(r) / denom);
    }

    InequalityReport rep;
    rep.lhs = weighted_integral(u, &h, k, q - 1, idx, n);

    double S = sharp_sobolev_constant(n);
    double norm_h = h1v_norm(h, v, n);
    std::vector<double> r, f;
    for (std::size_t i : idx) r.push_back(u.grid().nodes[i]);

    auto power_mass = [&](double expo) {
        f.clear();
        for (double rr : r) f.push_back(std::pow(rr, expo + N - 1));
        return sphere_area(n) * quad(r, f);
    };

    char buf[160];
    if (beta <= 0.5) {
        double t = 2 * N / (N + 2 * (1 - 2 * beta));
        double mass = power_mass((alpha - nu * (q - 1)) * t);
        rep.rhs = lambda_cap * std::pow(m, q - 1) * std::pow(S, 1 - 2 * beta) *
                  std::pow(mass, 1.0 / t) * norm_h;
        std::snprintf(buf, sizeof buf, "beta_le_half sobolev=%.6g", S);
    } else if (beta < 1.0) {
        double mass = power_mass((alpha - nu * (q - 2 * beta)) / (1 - beta));
        double norm_u = h1v_norm(u, v, n);
        rep.rhs = lambda_cap * std::pow(m, q - 2 * beta) * std::pow(mass, 1 - beta) *
                  std::pow(norm_u, 2 * beta - 1) * norm_h;
        std::snprintf(buf, sizeof buf, "beta_mid sobolev=%.6g", S);
    } else {
        f.clear();
        for (std::size_t i : idx) {
            double rr = u.grid().nodes[i];
            double uu = u.values()[i];
            f.push_back(safe_mul(uu * uu, v.eval(rr) *
                                              std::pow(rr, 2 * alpha - 2 * nu * (q - 2) + N - 1)));
        }
        double mass = sphere_area(n) * quad(r, f);
        rep.rhs = lambda_cap * std::pow(m, q - 2) * std::sqrt(mass) * norm_h;
        std::snprintf(buf, sizeof buf, "beta_one sobolev=%.6g", S);
    }
    rep.case_label = buf;
    rep.holds = rep.lhs <= rep.rhs * (1 + kHoldsTol);
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

InequalityReport annulus_check(const RadialFunction& u, const RadialFunction& h, double r,
                               double R, double q, const pot::Potential& k, double s,
                               const pot::Potential& v, const Dim& n) {
    double N = n.n();
    if (!(r > 0) || !(R > r)) throw PreconditionViolated("needs 0 < r < R");
    if (!(q > 1)) throw PreconditionViolated("needs q > 1");
    if (!(s > 2 * N / (N + 2))) throw PreconditionViolated("needs s > 2N/(N+2)");
    auto idx = nodes_in(u.grid(), r, R);
    if (idx.size() < 2) throw PreconditionViolated("empty annulus");

    std::vector<double> rr, f;
    for (std::size_t i : idx) rr.push_back(u.grid().nodes[i]);
    f.clear();
    for (double x : rr) f.push_back(std::pow(k.eval(x), s) * std::pow(x, N - 1));
    double ks_mass = sphere_area(n) * quad(rr, f);
    if (!std::isfinite(ks_mass)) throw PreconditionViolated("K not in L^s on the annulus");
    double k_norm = std::pow(ks_mass, 1.0 / s);

    double qt = 2 * (1 + 1.0 / N - 1.0 / s);
    InequalityReport rep;
    rep.lhs = weighted_integral(u, &h, k, q - 1, idx, n);

    f.clear();
    for (std::size_t i : idx) {
        double x = u.grid().nodes[i];
        double uu = u.values()[i];
        f.push_back(safe_mul(uu * uu, std::pow(x, N - 1)));
    }
    double u2 = sphere_area(n) * quad(rr, f);

    double S = sharp_sobolev_constant(n);
    double norm_h = h1v_norm(h, v, n);
    char buf[200];
    if (q <= qt) {
        double vol = sphere_area(n) * (std::pow(R, N) - std::pow(r, N)) / N;
        rep.rhs = S * k_norm * norm_h * std::pow(vol, (qt - q) / 2) * std::pow(u2, (q - 1) / 2);
        std::snprintf(buf, sizeof buf, "q_le_qtilde qtilde=%.6g sobolev=%.6g", qt, S);
    } else {
        double cn = ni_constant_estimate(n);
        double norm_u = h1v_norm(u, v, n);
        rep.rhs = S * k_norm * norm_h *
                  std::pow(cn * norm_u / std::pow(r, (N - 2) / 2.0), q - qt) *
                  std::pow(u2, (qt - 1) / 2);
        std::snprintf(buf, sizeof buf, "q_gt_qtilde qtilde=%.6g sobolev=%.6g ni=%.6g", qt, S, cn);
    }
    rep.case_label = buf;
    rep.holds = rep.lhs <= rep.rhs * (1 + kHoldsTol);
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

double sum_norm_split(const RadialFunction& u, const pot::Potential& k, double p1, double p2,
                      const Dim& n) {
    if (!(p1 > 1) || !(p1 <= p2)) throw PreconditionViolated("needs 1 < p1 <= p2");
    const auto& r = u.grid().nodes;
    double area = sphere_area(n);

    // Cumulative trapezoid masses of K|u|^p r^{N-1} for both exponents, so a
    // split at any node costs O(1).
    auto cumulative = [&](double p) {
        std::vector<double> cum(r.size(), 0.0);
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            auto g = [&](std::size_t j) {
                return safe_mul(std::pow(std::fabs(u.values()[j]), p),
                                k.eval(r[j]) * std::pow(r[j], n.n() - 1));
            };
            double dt = std::log(r[i + 1] / r[i]);
            cum[i + 1] = cum[i] + dt * (g(i) * r[i] + g(i + 1) * r[i + 1]) / 2.0;
            if (!std::isfinite(cum[i + 1])) throw NonIntegrable("quadrature overflow");
        }
        for (double& c : cum) c *= area;
        return cum;
    };
    auto cum1 = cumulative(p1);
    auto cum2 = cumulative(p2);
    double tot1 = cum1.back(), tot2 = cum2.back();

    auto norm = [](double mass, double p) { return std::pow(std::max(mass, 0.0), 1.0 / p); };
    double best = std::min(norm(tot1, p1), norm(tot2, p2));  // trivial splits
    for (std::size_t j = 0; j < r.size(); ++j) {
        double inner1 = norm(cum1[j], p1), outer2 = norm(tot2 - cum2[j], p2);
        double inner2 = norm(cum2[j], p2), outer1 = norm(tot1 - cum1[j], p1);
        best = std::min(best, std::max(inner1, outer2));
        best = std::min(best, std::max(inner2, outer1));
    }
    return best;
}

}  // namespace sobemb::numerics

#include "sobemb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sobemb/errors.hpp"
#include "sobemb/exponents.hpp"
#include "sobemb/numerics.hpp"
#include "sobemb/potentials.hpp"
#include "sobemb/region.hpp"
#include "sobemb/scalar.hpp"

namespace sobemb::verify {

namespace exp = sobemb::exponents;
namespace num = sobemb::numerics;
namespace pot = sobemb::potentials;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// mt19937_64 output is specified bit-for-bit, so deriving variates from raw
// 64-bit draws (instead of std distributions) keeps reports portable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        double t = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * t;
    }
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    // Exact rational with numerator in [-num_max, num_max], denominator in [1, den_max].
    Scalar rational(std::int64_t num_max, std::int64_t den_max) {
        return Scalar(Rat(uniform_int(-num_max, num_max), uniform_int(1, den_max)));
    }
    int dim_choice() { return static_cast<int>(uniform_int(3, 5)); }

  private:
    std::mt19937_64 gen_;
};

std::string fmt(const char* pattern, ...) {
    char buf[256];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

struct Tally {
    long total = 0;
    long failed = 0;
    double worst_lhs = 0;
    double worst_rhs = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    std::string first_failure;

    void add(bool ok, double lhs, double rhs, double slack, const std::string& desc) {
        ++total;
        if (slack < min_slack) {
            min_slack = slack;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
        if (!ok) {
            ++failed;
            if (first_failure.empty()) first_failure = desc;
        }
    }
    // Boolean agreement checks: slack carries the running agreement fraction.
    void add(bool ok, const std::string& desc) {
        add(ok, ok ? 1 : 0, 0, ok ? 1 : 0, desc);
    }

    CheckRecord record(const std::string& name, const std::string& inputs) const {
        CheckRecord r;
        r.name = name;
        r.inputs = inputs;
        r.lhs = worst_lhs;
        r.rhs = worst_rhs;
        r.slack = std::isfinite(min_slack) ? min_slack : 0.0;
        r.holds = failed == 0 && total > 0;
        r.detail = fmt("%ld/%ld instances passed", total - failed, total);
        if (!first_failure.empty()) r.detail += "; first failure: " + first_failure;
        return r;
    }
};

// ---------------------------------------------------------------------------
// exponents suite
// ---------------------------------------------------------------------------

CheckRecord check_q_star_monotone(Rng& rng) {
    Tally t;
    for (int i = 0; i < 2000; ++i) {
        Dim n(rng.dim_choice());
        Scalar a = rng.rational(40, 8);
        // keep beta and beta + db inside the guarded range (-inf, 1]
        Scalar b(Rat(rng.uniform_int(-16, 8), 16));
        Scalar da = Scalar(Rat(rng.uniform_int(1, 20), rng.uniform_int(1, 8)));
        Scalar db(Rat(rng.uniform_int(1, 8), 16));
        bool up_in_alpha = exp::q_star(a + da, b, n) > exp::q_star(a, b, n);
        bool down_in_beta = exp::q_star(a, b + db, n) < exp::q_star(a, b, n);
        t.add(up_in_alpha && down_in_beta,
              fmt("alpha=%s beta=%s N=%d", a.str().c_str(), b.str().c_str(), n.n()));
    }
    return t.record("q_star_monotone",
                    "2000 rational (alpha,beta) with positive rational increments, N in {3,4,5}");
}

CheckRecord check_alpha_star_sign(Rng&) {
    Tally t;
    for (int n_val : {3, 4, 5, 7}) {
        Dim n(n_val);
        for (int k = 0; k <= 64; ++k) {
            Scalar beta(Rat(k, 64));
            Scalar a = exp::alpha_star(beta, n);
            bool ok = (k == 64) ? a.is_zero() : (a < Scalar(0));
            t.add(ok, fmt("beta=%d/64 N=%d", k, n_val));
        }
    }
    return t.record("alpha_star_sign", "beta grid k/64 on [0,1], N in {3,4,5,7}");
}

CheckRecord check_shift_invariance(Rng& rng) {
    Tally t;
    for (int i = 0; i < 2000; ++i) {
        Dim n(rng.dim_choice());
        Scalar a = rng.rational(40, 8);
        Scalar b(Rat(rng.uniform_int(-8, 8), 8));
        Scalar g = rng.rational(30, 4);
        if (g == n.N() || g == Scalar(2 * n.n() - 2)) continue;  // poles
        Scalar shifted = a - b * g;
        bool ok = exp::q_sub(shifted, Scalar(0), g, n) == exp::q_sub(a, b, g, n) &&
                  exp::q_subsub(shifted, Scalar(0), g, n) == exp::q_subsub(a, b, g, n);
        t.add(ok, fmt("alpha=%s beta=%s gamma=%s N=%d", a.str().c_str(), b.str().c_str(),
                      g.str().c_str(), n.n()));
    }
    return t.record("shift_invariance",
                    "2000 rational (alpha,beta,gamma) off the poles: "
                    "threshold functions at (alpha - beta*gamma, 0) vs (alpha, beta)");
}

CheckRecord check_thm1_split(Rng& rng) {
    Tally t;
    for (int i = 0; i < 10000; ++i) {
        Dim n(rng.dim_choice());
        Scalar a = rng.rational(60, 12);
        Scalar b = Scalar(Rat(rng.uniform_int(0, 12), 12));
        Scalar direct = exp::thm1_threshold(a, b, n);
        Scalar piecewise = exp::thm1_threshold_piecewise(a, b, n);
        Scalar expected = (a <= exp::alpha_star(b, n)) ? max(Scalar(1), Scalar(2) * b)
                                                       : exp::q_star(a, b, n);
        bool ok = direct == piecewise && direct == expected && direct.exact();
        t.add(ok, fmt("alpha=%s beta=%s N=%d", a.str().c_str(), b.str().c_str(), n.n()));
    }
    return t.record("growth_only_threshold_piecewise",
                    "10^4 rational samples: direct max form vs split at the sign-change alpha");
}

CheckRecord check_thm2_piecewise(Rng& rng) {
    Tally t;
    for (int i = 0; i < 10000; ++i) {
        Dim n(rng.dim_choice());
        Scalar a = rng.rational(60, 12);
        Scalar b = Scalar(Rat(rng.uniform_int(0, 12), 12));
        Scalar g = Scalar(2) - Scalar(Rat(rng.uniform_int(0, 96), 12));  // gamma in [-6, 2]
        Scalar direct = exp::thm2_threshold(a, b, g, n);
        Scalar piecewise = exp::thm2_threshold_piecewise(a, b, g, n);
        bool ok = direct == piecewise && direct.exact();
        t.add(ok, fmt("alpha=%s beta=%s gamma=%s N=%d", a.str().c_str(), b.str().c_str(),
                      g.str().c_str(), n.n()));
    }
    return t.record("decay_threshold_piecewise",
                    "10^4 rational samples with gamma in [-6,2]: direct four-way max vs "
                    "piecewise description");
}

CheckRecord check_thm2_vs_thm1(Rng& rng) {
    Tally t;
    for (int i = 0; i < 2000; ++i) {
        Dim n(rng.dim_choice());
        Scalar a = rng.rational(60, 12);
        Scalar b = Scalar(Rat(rng.uniform_int(0, 12), 12));
        Scalar g = Scalar(2) - Scalar(Rat(rng.uniform_int(1, 96), 12));  // gamma < 2
        Scalar with_decay = exp::thm2_threshold(a, b, g, n);
        Scalar growth_only = exp::thm1_threshold(a, b, n);
        bool strict_expected = a > exp::alpha_star(b, n);
        bool ok = with_decay <= growth_only && ((with_decay < growth_only) == strict_expected);
        t.add(ok, fmt("alpha=%s beta=%s gamma=%s N=%d", a.str().c_str(), b.str().c_str(),
                      g.str().c_str(), n.n()));
    }
    return t.record("decay_improves_growth_only",
                    "2000 rational samples with gamma < 2: decay-refined threshold <= "
                    "growth-only threshold, strictly iff alpha above the sign-change");
}

CheckRecord check_thm_agree_at_gamma2(Rng& rng) {
    Tally t;
    for (int i = 0; i < 2000; ++i) {
        Dim n(rng.dim_choice());
        Scalar a = rng.rational(60, 12);
        Scalar b = Scalar(Rat(rng.uniform_int(0, 12), 12));
        bool ok = exp::thm2_threshold(a, b, Scalar(2), n) == exp::thm1_threshold(a, b, n);
        t.add(ok, fmt("alpha=%s beta=%s N=%d", a.str().c_str(), b.str().c_str(), n.n()));
    }
    return t.record("decay_threshold_collapses_at_gamma2",
                    "2000 rational samples: decay-refined threshold at gamma=2 equals the "
                    "growth-only threshold");
}

// ---------------------------------------------------------------------------
// region suite
// ---------------------------------------------------------------------------

CheckRecord check_gamma2_consistency(Rng& rng) {
    Tally t;
    for (int i = 0; i < 100000; ++i) {
        Dim n(rng.dim_choice());
        Scalar a = Scalar::from_double(rng.uniform(-8, 4));
        Scalar b = Scalar::from_double(rng.uniform(0, 1));
        Scalar q = Scalar::from_double(rng.uniform(0.05, 20));
        auto spec = region::RegionSpec::make(b, Scalar(2), n);
        bool member = region::membership(a, q, spec);
        bool formula = max(Scalar(1), Scalar(2) * b) < q && q < exp::q_star(a, b, n);
        t.add(member == formula,
              fmt("alpha=%.6g beta=%.6g q=%.6g N=%d", a.value(), b.value(), q.value(), n.n()));
    }
    return t.record("hardy_consistency_gamma2",
                    "10^5 random (alpha,beta,q), gamma=2: membership vs "
                    "max{1,2beta} < q < q*(alpha,beta)");
}

CheckRecord check_gamma_monotonicity(Rng& rng) {
    Tally t;
    int produced = 0;
    while (produced < 10000) {
        Dim n(rng.dim_choice());
        Scalar b = Scalar::from_double(rng.uniform(0, 1));
        double g1d = rng.uniform(2, 11);
        double g2d = rng.uniform(2, 11);
        if (g1d > g2d) std::swap(g1d, g2d);
        if (g2d - g1d < 1e-6) continue;
        auto small = region::RegionSpec::make(b, Scalar::from_double(g1d), n);
        auto big = region::RegionSpec::make(b, Scalar::from_double(g2d), n);
        Scalar a = Scalar::from_double(rng.uniform(-12, 4));
        QInterval slice = region::slice_interval(a, small);
        if (slice.empty()) continue;
        double lo = slice.lo.value();
        double q_val;
        if (slice.hi.finite()) {
            double span = slice.hi.value() - lo;
            q_val = lo + span * rng.uniform(0.02, 0.98);
        } else {
            q_val = lo + std::max(1.0, lo) * rng.uniform(0.02, 8.0);
        }
        Scalar q = Scalar::from_double(q_val);
        if (!region::membership(a, q, small)) continue;  // landed on a fuzzy edge
        ++produced;
        t.add(region::membership(a, q, big),
              fmt("alpha=%.6g beta=%.6g q=%.6g gamma1=%.6g gamma2=%.6g N=%d", a.value(),
                  b.value(), q.value(), g1d, g2d, n.n()));
    }
    return t.record("gamma_monotonicity",
                    "10^4 random members of the smaller-gamma region checked against the "
                    "larger-gamma region, 2 <= gamma1 < gamma2 <= 11");
}

CheckRecord check_beta_shift(Rng& rng) {
    Tally t;
    for (int i = 0; i < 2000; ++i) {
        Dim n(rng.dim_choice());
        Scalar b(Rat(-rng.uniform_int(1, 128), rng.uniform_int(1, 8)));  // beta < 0
        Scalar g = Scalar(2) + Scalar(Rat(rng.uniform_int(0, 72), 8));
        Scalar a = rng.rational(60, 8);
        Scalar q = Scalar(Rat(rng.uniform_int(1, 160), 8));
        auto raw = region::RegionSpec::make(b, g, n);
        auto shifted = region::RegionSpec::make(Scalar(0), g, n);
        bool ok = region::membership(a, q, raw) ==
                  region::membership(a - b * g, q, shifted);
        t.add(ok, fmt("alpha=%s beta=%s gamma=%s q=%s N=%d", a.str().c_str(), b.str().c_str(),
                      g.str().c_str(), q.str().c_str(), n.n()));
    }
    return t.record("negative_beta_shift",
                    "2000 rational samples with beta < 0: membership at (alpha,beta) vs "
                    "(alpha - beta*gamma, 0)");
}

CheckRecord check_slice_consistency(Rng& rng) {
    Tally t;
    for (int i = 0; i < 100000; ++i) {
        Dim n(rng.dim_choice());
        Scalar b = Scalar::from_double(rng.uniform(0, 1));
        Scalar g = Scalar::from_double(rng.uniform(2, 12));
        Scalar a = Scalar::from_double(rng.uniform(-12, 4));
        Scalar q = Scalar::from_double(rng.uniform(0.05, 25));
        auto spec = region::RegionSpec::make(b, g, n);
        bool ok = region::membership(a, q, spec) == region::slice_interval(a, spec).contains(q);
        t.add(ok, fmt("alpha=%.6g beta=%.6g gamma=%.6g q=%.6g N=%d", a.value(), b.value(),
                      g.value(), q.value(), n.n()));
    }
    return t.record("slice_membership_consistency",
                    "10^5 random points: membership agrees with slice_interval containment");
}

CheckRecord check_appendix_equivalence(Rng& rng) {
    Tally t;
    int produced = 0;
    while (produced < 10000) {
        Dim n(rng.dim_choice());
        double beta = rng.uniform(0, 1);
        double gamma = rng.uniform(2.001, 12);
        double alpha = rng.uniform(-3.0 * n.n(), n.n());
        double q = rng.uniform(0.05, 25);
        auto spec =
            region::RegionSpec::make(Scalar::from_double(beta), Scalar::from_double(gamma), n);
        if (region::boundary_distance(alpha, q, spec) <= 1e-6) continue;
        ++produced;
        bool member =
            region::membership(Scalar::from_double(alpha), Scalar::from_double(q), spec);
        bool brute = region::xi_feasible_brute(alpha, beta, gamma, q,
                                               region::XiSearch::for_beta(beta), n);
        t.add(member == brute, fmt("alpha=%.8g beta=%.8g gamma=%.8g q=%.8g N=%d", alpha, beta,
                                   gamma, q, n.n()));
    }
    return t.record("brute_force_equivalence",
                    "10^4 random points at boundary distance > 1e-6: closed-form membership "
                    "vs exhaustive auxiliary-exponent search");
}

// ---------------------------------------------------------------------------
// numerics suite
// ---------------------------------------------------------------------------

CheckRecord check_quadrature_convergence(Rng&) {
    Tally t;
    Dim n(3);
    auto coarse = num::RadialGrid::log_spaced(1e-6, 1e3, 4096);
    auto fine = num::RadialGrid::log_spaced(1e-6, 1e3, 8192);
    auto v = pot::Potential::power(Scalar(1), Scalar(-2));
    auto k = pot::Potential::power(Scalar(1), Scalar::from_double(0.5));
    for (double s : {0.25, 1.0, 4.0}) {
        // the same continuous profile sampled on both grids, so the norms
        // differ by quadrature error alone
        num::BumpFamily fam{{s}};
        auto uc = fam.member(coarse, 0, n);
        auto uf = fam.member(fine, 0, n);
        double nc = num::h1v_norm(uc, v, n), nf = num::h1v_norm(uf, v, n);
        double lc = num::weighted_lq(uc, k, 3, 0, kInf, n);
        double lf = num::weighted_lq(uf, k, 3, 0, kInf, n);
        double rel_n = std::fabs(nc - nf) / nf;
        double rel_l = std::fabs(lc - lf) / lf;
        double rel = std::max(rel_n, rel_l);
        t.add(rel < 1e-3, rel, 1e-3, 1e-3 - rel, fmt("scale=%.3g rel=%.3g", s, rel));
    }
    return t.record("quadrature_convergence",
                    "bump profiles at three scales: doubling the grid density moves the "
                    "energy norm and a weighted Lq integral by < 1e-3 relative");
}

CheckRecord check_scaling_slopes(Rng&) {
    Tally t;
    const auto& grid = num::default_grid();
    struct Case {
        double a, q;
        int n;
    } cases[] = {{0, 4, 3}, {0, 8, 3}, {1, 6, 3}, {-1, 3, 4}, {0, 3, 5}, {2, 5, 3}};
    for (const auto& c : cases) {
        Dim n(c.n);
        auto k = pot::Potential::power(Scalar(1), Scalar::from_double(c.a));
        std::vector<double> radii, vals;
        for (int i = 1; i <= 6; ++i) {
            double R = std::pow(2.0, -i);
            num::BumpFamily fam{{R / 2}};
            radii.push_back(R);
            vals.push_back(num::s_lower_bound(c.q, R, pot::Potential::Side::Origin,
                                              pot::Potential::zero(), k, fam, grid, n));
        }
        double slope = num::decay_slope_fit(radii, vals);
        double want =
            (c.n - 2) * (exp::q_star(Scalar::from_double(c.a), Scalar(0), n).value() - c.q) / 2;
        double err = std::fabs(slope - want);
        t.add(err <= 0.05, slope, want, 0.05 - err,
              fmt("alpha=%g q=%g N=%d slope=%.6g want=%.6g", c.a, c.q, c.n, slope, want));
    }
    return t.record("origin_scaling_slopes",
                    "V=0, K=r^alpha over six (alpha,q,N) combinations: log-log slope of the "
                    "restricted-sup lower bound over R=2^-1..2^-6 vs (N-2)(q*-q)/2 within 0.05");
}

CheckRecord check_s_monotone(Rng&) {
    Tally t;
    Dim n(3);
    const auto& grid = num::default_grid();
    auto v = pot::Potential::power(Scalar(1), Scalar(-2));
    auto k = pot::Potential::power(Scalar(1), Scalar(0));
    auto fam = num::BumpFamily::geometric(0.0625, 2.0, 9);
    double prev_origin = -1, prev_infinity = -1;
    bool origin_ok = true, infinity_ok = true;
    std::vector<double> windows = {0.25, 0.5, 1, 2, 4, 8};
    for (double R : windows) {
        double so = num::s_lower_bound(3, R, pot::Potential::Side::Origin, v, k, fam, grid, n);
        double si = num::s_lower_bound(3, R, pot::Potential::Side::Infinity, v, k, fam, grid, n);
        if (prev_origin >= 0 && so < prev_origin * (1 - 1e-12)) origin_ok = false;
        if (prev_infinity >= 0 && si > prev_infinity * (1 + 1e-12)) infinity_ok = false;
        prev_origin = so;
        prev_infinity = si;
    }
    t.add(origin_ok, "origin side nondecreasing in R");
    t.add(infinity_ok, "infinity side nonincreasing in R");
    return t.record("restricted_sup_monotone",
                    "windows R in {0.25,...,8}: origin-side lower bound nondecreasing, "
                    "infinity-side nonincreasing");
}

double envelope_constant(const num::RadialFunction& u, double nu, double r_lo, double r_hi) {
    double m = 0;
    const auto& nodes = u.grid().nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] >= r_lo && nodes[i] <= r_hi)
            m = std::max(m, std::fabs(u.values()[i]) * std::pow(nodes[i], nu));
    return m * 1.0001;
}

CheckRecord check_lemma_omega(Rng& rng) {
    Tally t;
    const auto& grid = num::default_grid();
    Dim n3(3);
    for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (int i = 0; i < 100; ++i) {
            double g = rng.uniform(0.5, 2.0);  // V = c_v r^-g
            double cv = rng.uniform(0.5, 2.0);
            double ck = rng.uniform(0.5, 2.0);
            double ka = rng.uniform(-1.0, 0.5);  // K = c_k r^ka
            auto v = pot::Potential::power(Scalar::from_double(cv), Scalar::from_double(-g));
            auto k = pot::Potential::power(Scalar::from_double(ck), Scalar::from_double(ka));
            num::BumpFamily fam{{num::snap_scale(grid, rng.uniform(0.3, 3.0))}};
            num::BumpFamily fam_h{{num::snap_scale(grid, rng.uniform(0.3, 3.0))}};
            auto u = fam.member(grid, 0, n3);
            auto h = fam_h.member(grid, 0, n3);
            num::OmegaCheckInput in;
            in.r_lo = rng.uniform(0.005, 0.05);
            in.r_hi = rng.uniform(8.0, 20.0);
            in.beta = beta;
            in.nu = rng.uniform(0.3, 0.8);
            in.q = (beta == 1.0) ? rng.uniform(2.2, 4.5)
                                 : rng.uniform(std::max(1.0, 2 * beta) + 0.2, 4.5);
            in.alpha = ka + beta * g;  // K / (r^alpha V^beta) is then bounded
            in.m = envelope_constant(u, in.nu, in.r_lo, in.r_hi);
            auto rep = num::lemma_omega_check(u, h, in, v, k, n3);
            t.add(rep.holds, rep.lhs, rep.rhs, rep.rhs * (1 + 1e-9) - rep.lhs,
                  fmt("beta=%g q=%.4g alpha=%.4g g=%.4g [%s]", beta, in.q, in.alpha, g,
                      rep.case_label.c_str()));
        }
    }
    return t.record("annular_growth_bound_branches",
                    "100 random power-potential/bump instances per beta branch "
                    "{0, 1/4, 1/2, 3/4, 1}, RHS tolerance factor 1+1e-9");
}

CheckRecord check_annulus(Rng& rng) {
    Tally t;
    const auto& grid = num::default_grid();
    Dim n3(3);
    for (int branch = 0; branch < 2; ++branch) {
        for (int i = 0; i < 100; ++i) {
            double s = rng.uniform(2.0, 6.0);
            double q_tilde = 2 * (1 + 1.0 / 3 - 1.0 / s);
            double q = branch == 0 ? rng.uniform(1.05, q_tilde) : rng.uniform(q_tilde + 0.05, 7.0);
            double r = rng.uniform(0.02, 0.2);
            double R = rng.uniform(2.0, 8.0);
            double ck = rng.uniform(0.5, 2.0);
            double ka = rng.uniform(-0.4, 0.4);
            auto k = pot::Potential::power(Scalar::from_double(ck), Scalar::from_double(ka));
            num::BumpFamily fam{{num::snap_scale(grid, rng.uniform(0.3, 3.0))}};
            num::BumpFamily fam_h{{num::snap_scale(grid, rng.uniform(0.3, 3.0))}};
            auto u = fam.member(grid, 0, n3);
            auto h = fam_h.member(grid, 0, n3);
            auto rep = num::annulus_check(u, h, r, R, q, k, s, pot::Potential::zero(), n3);
            bool right_branch = (branch == 0) == (rep.case_label.rfind("q_le", 0) == 0);
            t.add(rep.holds && right_branch, rep.lhs, rep.rhs, rep.rhs * (1 + 1e-9) - rep.lhs,
                  fmt("q=%.4g s=%.4g r=%.3g R=%.3g [%s]", q, s, r, R, rep.case_label.c_str()));
        }
    }
    return t.record("annulus_interpolation_branches",
                    "100 random instances per branch (q below / above the interpolation "
                    "pivot), RHS tolerance factor 1+1e-9");
}

CheckRecord check_ni_invariance(Rng& rng) {
    Tally t;
    const auto& grid = num::default_grid();
    Dim n3(3);
    double base = num::pointwise_ratio(
        num::BumpFamily{{num::snap_scale(grid, 1.0)}}.member(grid, 0, n3),
        num::PointwiseMode::ni(), n3);
    for (int i = 0; i < 20; ++i) {
        double s = num::snap_scale(grid, std::pow(2.0, rng.uniform(-5, 5)));
        double val = num::pointwise_ratio(num::BumpFamily{{s}}.member(grid, 0, n3),
                                          num::PointwiseMode::ni(), n3);
        double rel = std::fabs(val - base) / base;
        t.add(rel < 1e-6, val, base, 1e-6 - rel, fmt("scale=%.6g rel=%.3g", s, rel));
    }
    return t.record("pointwise_ratio_scale_invariance",
                    "20 snapped scales over 2^-5..2^5: the decay-normalized sup ratio is "
                    "scale invariant within 1e-6 relative");
}

CheckRecord check_s_le_r(Rng& rng) {
    Tally t;
    const auto& grid = num::default_grid();
    Dim n3(3);
    auto v = pot::Potential::power(Scalar(1), Scalar(-1));
    auto k = pot::Potential::power(Scalar(1), Scalar(0));
    auto fam = num::BumpFamily::geometric(0.125, 2.0, 6);
    for (int i = 0; i < 30; ++i) {
        double q = rng.uniform(2.2, 5.0);
        double R = std::pow(2.0, rng.uniform(-2, 2));
        std::size_t pick = static_cast<std::size_t>(rng.uniform_int(0, 5));
        auto u = fam.member(grid, pick, n3);
        double nu_norm = num::h1v_norm(u, v, n3);
        double s_val = num::weighted_lq(u, k, q, 0, R, n3) / std::pow(nu_norm, q);
        double r_val = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            auto h = fam.member(grid, j, n3);
            double nh = num::h1v_norm(h, v, n3);
            if (nh == 0) continue;
            r_val = std::max(r_val, num::weighted_mixed(u, h, k, q, 0, R, n3) /
                                        (std::pow(nu_norm, q - 1) * nh));
        }
        t.add(s_val <= r_val * (1 + 1e-9), s_val, r_val, r_val * (1 + 1e-9) - s_val,
              fmt("q=%.4g R=%.4g member=%zu", q, R, pick));
    }
    return t.record("restricted_sup_vs_pairing",
                    "30 random (q,R,member) cases: the q-power restricted functional is "
                    "dominated by the best mixed pairing over the trial family");
}

void run_exponents(Rng& rng, std::vector<CheckRecord>& out) {
    out.push_back(check_q_star_monotone(rng));
    out.push_back(check_alpha_star_sign(rng));
    out.push_back(check_shift_invariance(rng));
    out.push_back(check_thm1_split(rng));
    out.push_back(check_thm2_piecewise(rng));
    out.push_back(check_thm2_vs_thm1(rng));
    out.push_back(check_thm_agree_at_gamma2(rng));
}

void run_region(Rng& rng, std::vector<CheckRecord>& out) {
    out.push_back(check_gamma2_consistency(rng));
    out.push_back(check_gamma_monotonicity(rng));
    out.push_back(check_beta_shift(rng));
    out.push_back(check_slice_consistency(rng));
}

void run_appendix(Rng& rng, std::vector<CheckRecord>& out) {
    out.push_back(check_appendix_equivalence(rng));
}

void run_numerics(Rng& rng, std::vector<CheckRecord>& out) {
    out.push_back(check_quadrature_convergence(rng));
    out.push_back(check_scaling_slopes(rng));
    out.push_back(check_s_monotone(rng));
    out.push_back(check_lemma_omega(rng));
    out.push_back(check_annulus(rng));
    out.push_back(check_ni_invariance(rng));
    out.push_back(check_s_le_r(rng));
}

}  // namespace

bool SuiteReport::all_passed() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.holds; });
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed) {
    SuiteReport report;
    report.suite = suite;
    report.seed = seed;
    Rng rng(seed);
    if (suite == "exponents")
        run_exponents(rng, report.records);
    else if (suite == "region")
        run_region(rng, report.records);
    else if (suite == "appendix")
        run_appendix(rng, report.records);
    else if (suite == "numerics")
        run_numerics(rng, report.records);
    else if (suite == "all") {
        run_exponents(rng, report.records);
        run_region(rng, report.records);
        run_appendix(rng, report.records);
        run_numerics(rng, report.records);
    } else {
        throw InvalidSpec("unknown suite '" + suite +
                          "' (expected exponents|region|appendix|numerics|all)");
    }
    return report;
}

}  // namespace sobemb::verify

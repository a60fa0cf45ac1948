#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sobemb/potentials.hpp"
#include "sobemb/scalar.hpp"

namespace sobemb::numerics {

// Strictly increasing, log-spaced quadrature nodes.
struct RadialGrid {
    std::vector<double> nodes;

    // count >= 64 nodes spanning [r_lo, r_hi], geometric spacing.
    static RadialGrid log_spaced(double r_lo, double r_hi, int count);

    std::size_t size() const { return nodes.size(); }
    // Common ratio between consecutive nodes.
    double ratio() const { return nodes[1] / nodes[0]; }
};

// Default quadrature corpus: 2^12 nodes on [1e-6, 1e3].
const RadialGrid& default_grid();

// Sampled radial profile with derivative values. The derivative defaults to
// centered finite differences in the log coordinate (one-sided at the ends);
// profiles with a known derivative can supply it exactly.
class RadialFunction {
  public:
    static RadialFunction sample(const RadialGrid& grid,
                                 const std::function<double(double)>& f);
    static RadialFunction sample_with_derivative(const RadialGrid& grid,
                                                 const std::function<double(double)>& f,
                                                 const std::function<double(double)>& df);

    const RadialGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& derivative() const { return derivative_; }

    bool is_zero() const;
    // Largest node radius where the value is nonzero; 0 when identically zero.
    double support_radius() const;

  private:
    RadialFunction(RadialGrid grid, std::vector<double> values, std::vector<double> der)
        : grid_(std::move(grid)), values_(std::move(values)), derivative_(std::move(der)) {}
    RadialGrid grid_;
    std::vector<double> values_;
    std::vector<double> derivative_;
};

// Scale family u_s(r) = s^{-(N-2)/2} * phi(r/s) built on the smooth template
// phi(t) = exp(-1/(1-(t-1)^2)) supported on (0,2). The normalization makes
// the gradient norm independent of s.
struct BumpFamily {
    std::vector<double> scales;

    static BumpFamily geometric(double s_lo, double ratio, int count);
    static double profile(double t);
    static double profile_derivative(double t);

    RadialFunction member(const RadialGrid& grid, std::size_t i, const Dim& n) const;
};

// Nearest scale commensurate with the grid spacing (s = r_0 * ratio^k); bump
// members at commensurate scales are exact translates in the log coordinate,
// making scale-invariance checks independent of quadrature error.
double snap_scale(const RadialGrid& grid, double s);

// Surface measure of the unit sphere in R^N.
double sphere_area(const Dim& n);

// Sharp constant of the Sobolev embedding D^{1,2}(R^N) -> L^{2*}(R^N):
// sup ||u||_{2*} / ||grad u||_2 = (Gamma(N)/Gamma(N/2))^{1/N} / sqrt(pi N (N-2)).
double sharp_sobolev_constant(const Dim& n);

// Observed-sup estimate of the constant in the radial decay bound
// |u(r)| <= C r^{-(N-2)/2} ||grad u||, over a frozen calibration family of
// bump profiles (scales 2^-3 .. 2^3 on the default grid).
double ni_constant_estimate(const Dim& n);

// sqrt( omega_{N-1} * int (u'^2 + V u^2) r^{N-1} dr ), composite trapezoid on
// the log grid. Throws NonIntegrable when the integrand overflows where u is
// nonzero; ZeroFunction is never thrown (the zero profile has norm 0).
double h1v_norm(const RadialFunction& u, const potentials::Potential& v, const Dim& n);

// omega_{N-1} * int_{r_lo}^{r_hi} K |u|^q r^{N-1} dr (the integral, not a
// root). r_hi may be +infinity. Requires q > 1.
double weighted_lq(const RadialFunction& u, const potentials::Potential& k, double q,
                   double r_lo, double r_hi, const Dim& n);

// omega_{N-1} * int_{r_lo}^{r_hi} K |u|^{q-1} |h| r^{N-1} dr, the pairing that
// the per-branch upper bounds dominate. Same grid required for u and h.
double weighted_mixed(const RadialFunction& u, const RadialFunction& h,
                      const potentials::Potential& k, double q, double r_lo, double r_hi,
                      const Dim& n);

// Certified lower bound for the restricted sup functionals: max over the
// family of weighted_lq(u/||u||, k, q, range) with range (0,R) for the origin
// side and (R, inf) for the infinity side, ||.|| the V-weighted norm.
double s_lower_bound(double q, double R, potentials::Potential::Side side,
                     const potentials::Potential& v, const potentials::Potential& k,
                     const BumpFamily& family, const RadialGrid& grid, const Dim& n);

// Least-squares slope of log(value) against log(radius). Requires >= 4
// points; throws DegenerateFit when a value is nonpositive or radii coincide.
double decay_slope_fit(const std::vector<double>& radii, const std::vector<double>& values);

// Weight selection for pointwise decay-bound ratios.
struct PointwiseMode {
    enum class Kind { Ni, Origin, Infinity };
    Kind kind = Kind::Ni;
    double gamma = 0;
    double lambda = 1;
    double radius = 0;

    static PointwiseMode ni() { return {}; }
    static PointwiseMode origin(double gamma, double lambda, double R) {
        return {Kind::Origin, gamma, lambda, R};
    }
    static PointwiseMode infinity(double gamma, double lambda, double R) {
        return {Kind::Infinity, gamma, lambda, R};
    }
};

// sup over eligible nodes of |u(r)| * w(r) / ||u||, where
//   ni:       w = r^{(N-2)/2},                         ||.|| the gradient norm;
//   infinity: w = lambda^{1/4} r^{(2(N-1)-gamma)/4} on nodes > R,
//   origin:   w = r^{(2N-2-gamma)/4} / sqrt(lambda^{-1/2} + R^{(gamma-2)/2}/lambda)
//             on nodes < R (u must be supported inside B_R),
// with ||.|| the norm weighted by V = lambda r^{-gamma} for the last two.
// Throws ZeroFunction when u vanishes identically.
double pointwise_ratio(const RadialFunction& u, const PointwiseMode& mode, const Dim& n);

struct InequalityReport {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;   // lhs <= rhs * (1 + 1e-9)
    double slack = 0;     // rhs - lhs
    std::string case_label;
};

// Parameters of the weighted Hoelder bound on an annulus: K compared against
// r^alpha V^beta with constant Lambda (sampled sup), |u| <= m r^{-nu} there.
struct OmegaCheckInput {
    double r_lo = 0;
    double r_hi = 0;
    double alpha = 0;
    double beta = 0;
    double q = 0;
    double m = 0;
    double nu = 0;
};

// Verifies int_Omega K |u|^{q-1} |h| dx against the branch-appropriate bound
// (branches beta in [0,1/2], (1/2,1), {1}). Throws BranchDomain when beta = 1
// and q <= 2; PreconditionViolated when q <= max{1,2beta} or the pointwise
// envelope |u| <= m r^{-nu} fails on the annulus.
InequalityReport lemma_omega_check(const RadialFunction& u, const RadialFunction& h,
                                   const OmegaCheckInput& in, const potentials::Potential& v,
                                   const potentials::Potential& k, const Dim& n);

// Verifies int_{B_R \ B_r} K |u|^{q-1} |h| dx against the two-branch bound
// driven by qtilde = 2(1 + 1/N - 1/s), with K in L^s on the annulus.
// Requires R > r > 0, q > 1, s > 2N/(N+2).
InequalityReport annulus_check(const RadialFunction& u, const RadialFunction& h, double r,
                               double R, double q, const potentials::Potential& k, double s,
                               const potentials::Potential& v, const Dim& n);

// Upper bound on the sum-space norm inf_{u1+u2=u} max(||u1||_{p1,K}, ||u2||_{p2,K})
// over radial splits at every grid radius (both orientations) plus the two
// trivial splits. Requires 1 < p1 <= p2.
double sum_norm_split(const RadialFunction& u, const potentials::Potential& k, double p1,
                      double p2, const Dim& n);

}  // namespace sobemb::numerics

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sobemb/interval.hpp"
#include "sobemb/scalar.hpp"

namespace sobemb::region {

// Position of gamma relative to the two poles N and 2N-2.
enum class CaseTag { GammaBelowN, GammaEqN, GammaBetween, GammaEq2Nm2, GammaAbove };

std::string case_tag_name(CaseTag tag);

// Parameters of the admissible region in the (alpha, q)-plane for one side:
// beta <= 1 and gamma >= 2 (the region is only defined for gamma >= 2).
struct RegionSpec {
    Scalar beta;
    Scalar gamma;
    Dim n;
    CaseTag case_tag;

    static RegionSpec make(const Scalar& beta, const Scalar& gamma, const Dim& n);
};

// Strict-inequality membership of (alpha, q); boundary points are excluded.
bool membership(const Scalar& alpha, const Scalar& q, const RegionSpec& spec);

// The vertical slice {q : (alpha, q) in the region} — an open interval,
// an open half-line, or empty. membership(a,q) iff slice_interval(a).contains(q).
QInterval slice_interval(const Scalar& alpha, const RegionSpec& spec);

// Boundary curves for plotting. Each vertex lies on the region boundary: a
// probe just inside is a member and a probe just outside is not.
struct BoundaryVertex {
    double alpha;
    double q;
    std::string label;  // active constraint(s), "=="-joined when they coincide
};
struct BoundaryCurve {
    std::string name;  // "lower_k", "upper_k", or "wall"
    std::vector<BoundaryVertex> vertices;
};
// Throws EmptyRange when alpha_range is degenerate. samples >= 2.
std::vector<BoundaryCurve> boundary_export(const RegionSpec& spec,
                                           std::pair<Scalar, Scalar> alpha_range,
                                           int samples);

// Search window for the auxiliary exponent xi used by the brute-force oracle:
// xi in [max{0,(1-2beta)/2}, 1-beta].
struct XiSearch {
    double xi_lo;
    double xi_hi;
    int grid_points;
    double margin;

    static XiSearch for_beta(double beta, int grid_points = 10000, double margin = 1e-6);
};

// Independent feasibility oracle: scans the xi window (uniform grid plus the
// window endpoints plus exact closed-form candidates) for an exponent xi that
// satisfies the interpolation system
//     q > 2(beta+xi)  and  q*(2N-2-gamma) < 4(alpha+xi*gamma) + 4N
//                                            - 2(gamma+2)(beta+xi),
// which folds the three sign cases of the denominator 2N-2-gamma into one
// comparison. Requires gamma > 2 and beta <= 1. Agreement with membership()
// away from the boundary is the correctness oracle for the region formulas.
bool xi_feasible_brute(double alpha, double beta, double gamma, double q,
                       const XiSearch& search, const Dim& n);

// Distance from (alpha, q) to the nearest constraint boundary of the region;
// used to filter random samples in equivalence sweeps.
double boundary_distance(double alpha, double q, const RegionSpec& spec);

}  // namespace sobemb::region

#include "sobemb/engine.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sobemb/errors.hpp"
#include "sobemb/region.hpp"

namespace sobemb::engine {

namespace exps = sobemb::exponents;
namespace pot = sobemb::potentials;
namespace reg = sobemb::region;

using pot::EnvelopePiece;
using pot::GrowthEnvelope;

namespace {

struct AffineFn {
    Scalar u;  // value at beta = 0
    Scalar v;  // slope in beta
    Scalar at(const Scalar& beta) const { return u + v * beta; }
};

// Root of a(beta) == b(beta) when the slopes differ.
std::optional<Scalar> crossing(const AffineFn& a, const AffineFn& b) {
    Scalar dv = a.v - b.v;
    if (dv.is_zero()) return std::nullopt;
    return (b.u - a.u) / dv;
}

struct Candidate {
    Scalar beta{0};
    bool beta_attained = true;  // beta itself usable, not only a limit point
    QInterval interval = QInterval::empty_interval();
    bool single_certified = false;
    ExtScalar alpha_report{Scalar(0)};
    std::optional<ExtScalar> gamma_report;
};

Scalar q_floor_at(const Scalar& beta) { return max(Scalar(1), Scalar(2) * beta); }


// Piece endpoints, pairwise crossings of the active affine bounds clipped to
// the piece, and midpoints of consecutive values; ascending, de-duplicated.
std::vector<Scalar> candidate_betas(const EnvelopePiece& piece,
                                    const std::vector<AffineFn>& parts) {
    std::vector<Scalar> vals{piece.beta_lo, piece.beta_hi};
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (auto b = crossing(parts[i], parts[j]))
                if (piece.beta_lo <= *b && *b <= piece.beta_hi) vals.push_back(*b);
    std::sort(vals.begin(), vals.end(),
              [](const Scalar& a, const Scalar& b) { return a.cmp(b) < 0; });
    vals.erase(std::unique(vals.begin(), vals.end(),
                           [](const Scalar& a, const Scalar& b) { return a.cmp(b) == 0; }),
               vals.end());
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i > 0) {
            Scalar mid = (vals[i - 1] + vals[i]) / Scalar(2);
            if (mid != vals[i - 1] && mid != vals[i]) out.push_back(mid);
        }
        out.push_back(vals[i]);
    }
    return out;
}

bool at_open_endpoint(const EnvelopePiece& piece, const Scalar& beta) {
    return (piece.lo_open && beta == piece.beta_lo) ||
           (piece.hi_open && beta == piece.beta_hi);
}

void validate_envelope(const GrowthEnvelope& env) {
    for (const auto& p : env.pieces) {
        if (p.beta_lo < Scalar(0) || p.beta_hi > Scalar(1) || p.beta_lo > p.beta_hi)
            throw InvalidSpec("growth candidate has beta outside [0,1]");
    }
}

// ---------------------------------------------------------------------------
// Origin side.
//
// Candidate family: for each envelope piece and each beta in it, alpha ranges
// over (-inf, abar(beta)] (or all of R when unbounded). The admissible
// q-interval of a single candidate is monotone in alpha in every gamma-case,
// so the union over alpha at fixed beta is the interval at abar(beta) for
// bounded pieces and the full half-line (max{1,2beta}, inf) for unbounded
// ones. The union over beta is then taken as an interval hull over exact
// evaluations at the critical beta values (piece endpoints, crossings of the
// affine bounds, midpoints).
// ---------------------------------------------------------------------------

enum class OriginPath { GrowthOnly, DecayFinite, DecayUnbounded };

// True when the decay-refined slice at (alpha, beta, gamma) is exactly the
// full half-line above max{1, 2beta}.
bool slice_is_full_halfline(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                            const Dim& dim) {
    auto spec = reg::RegionSpec::make(beta, gamma, dim);
    QInterval s = reg::slice_interval(alpha, spec);
    return !s.empty() && s.hi.is_pos_inf() && s.lo == ExtScalar(q_floor_at(beta));
}

// Finite-gamma witness certifying (max{1,2beta}, inf) when every gamma is
// usable at the origin. Succeeds whenever beta < 1/2 or alpha_cap >= -(1-beta)N.
std::optional<std::pair<Scalar, Scalar>> full_halfline_witness(
    const std::optional<Scalar>& alpha_cap, const Scalar& beta, const Dim& dim) {
    Scalar a2 = -(Scalar(1) - beta) * dim.N();
    Scalar g0 = Scalar(2 * dim.n() - 1);
    if (!alpha_cap.has_value() || *alpha_cap >= a2) {
        // alpha = -(1-beta)N with any gamma > 2N-2 collapses both decay bounds
        // below the floor.
        if (slice_is_full_halfline(a2, beta, g0, dim)) return std::make_pair(a2, g0);
    }
    if (alpha_cap.has_value() && beta < Scalar(1) / Scalar(2)) {
        // Push gamma up until -(N + (1-2beta)gamma)/2 drops below alpha_cap.
        Scalar need = (Scalar(-2) * *alpha_cap - dim.N()) / (Scalar(1) - Scalar(2) * beta);
        Scalar g = max(g0, need);
        if (slice_is_full_halfline(*alpha_cap, beta, g, dim))
            return std::make_pair(*alpha_cap, g);
    }
    return std::nullopt;
}

Candidate eval_origin_candidate(const EnvelopePiece& piece, const Scalar& beta,
                                OriginPath path, const Scalar& gamma_fin, const Dim& dim) {
    Candidate c;
    c.beta = beta;
    c.beta_attained = !at_open_endpoint(piece, beta);
    Scalar floor_q = q_floor_at(beta);

    if (!piece.alpha_unbounded) {
        Scalar abar = piece.c0 + piece.c1 * beta;
        switch (path) {
            case OriginPath::GrowthOnly: {
                c.interval = QInterval(ExtScalar(floor_q),
                                       ExtScalar(exps::q_star(abar, beta, dim)));
                c.single_certified = true;
                c.alpha_report = ExtScalar(abar);
                break;
            }
            case OriginPath::DecayFinite: {
                auto spec = reg::RegionSpec::make(beta, gamma_fin, dim);
                c.interval = reg::slice_interval(abar, spec);
                c.single_certified = true;
                c.alpha_report = ExtScalar(abar);
                c.gamma_report = ExtScalar(gamma_fin);
                break;
            }
            case OriginPath::DecayUnbounded: {
                c.interval = QInterval(ExtScalar(floor_q), ExtScalar::pos_inf());
                if (auto w = full_halfline_witness(abar, beta, dim)) {
                    c.single_certified = true;
                    c.alpha_report = ExtScalar(w->first);
                    c.gamma_report = ExtScalar(w->second);
                } else {
                    c.alpha_report = ExtScalar(abar);
                    c.gamma_report = ExtScalar::pos_inf();
                }
                break;
            }
        }
        return c;
    }

    // Unbounded alpha: the union over alpha is always the full half-line.
    c.interval = QInterval(ExtScalar(floor_q), ExtScalar::pos_inf());
    c.alpha_report = ExtScalar::pos_inf();
    switch (path) {
        case OriginPath::GrowthOnly:
            // q*(alpha, beta) is finite for every alpha: no single certificate.
            break;
        case OriginPath::DecayFinite: {
            c.gamma_report = ExtScalar(gamma_fin);
            auto spec = reg::RegionSpec::make(beta, gamma_fin, dim);
            if (spec.case_tag == reg::CaseTag::GammaEq2Nm2 ||
                spec.case_tag == reg::CaseTag::GammaAbove) {
                // Large alpha pushes both decay bounds below the floor; probe
                // the exact alphas where they touch it, then one step beyond.
                Scalar g = gamma_fin;
                Scalar kill1 = floor_q * (dim.N() - g) / Scalar(2) + g * beta - dim.N();
                std::vector<Scalar> probes{kill1, kill1 + Scalar(1)};
                if (spec.case_tag == reg::CaseTag::GammaAbove) {
                    Scalar twol = Scalar(2 * dim.n() - 2);
                    Scalar kill2 = floor_q * (twol - g) / Scalar(4) -
                                   ((Scalar(1) - Scalar(2) * beta) * g + twol) / Scalar(2);
                    Scalar m = max(kill1, kill2);
                    probes = {m, m + Scalar(1), m + Scalar(2)};
                }
                for (const Scalar& a : probes) {
                    QInterval s = reg::slice_interval(a, spec);
                    if (s.same_as(c.interval)) {
                        c.single_certified = true;
                        c.alpha_report = ExtScalar(a);
                        break;
                    }
                }
            }
            break;
        }
        case OriginPath::DecayUnbounded: {
            if (auto w = full_halfline_witness(std::nullopt, beta, dim)) {
                c.single_certified = true;
                c.alpha_report = ExtScalar(w->first);
                c.gamma_report = ExtScalar(w->second);
            } else {
                c.gamma_report = ExtScalar::pos_inf();
            }
            break;
        }
    }
    return c;
}

// Affine bounds that shape a piece's interval endpoints, used only to locate
// critical beta values. The zero function is included whenever a sign change
// of some expression switches the formula branch.
std::vector<AffineFn> origin_parts(const EnvelopePiece& piece, OriginPath path,
                                   const Scalar& gamma_fin, const Dim& dim) {
    std::vector<AffineFn> parts{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}};
    if (piece.alpha_unbounded) return parts;
    const Scalar& c0 = piece.c0;
    const Scalar& c1 = piece.c1;
    Scalar N = dim.N();
    if (path == OriginPath::GrowthOnly) {
        Scalar d = N - Scalar(2);
        parts.push_back({Scalar(2) * (c0 + N) / d, Scalar(2) * (c1 - Scalar(2)) / d});
    } else if (path == OriginPath::DecayFinite) {
        Scalar g = gamma_fin;
        if (g != N) {
            Scalar d = N - g;
            parts.push_back({Scalar(2) * (c0 + N) / d, Scalar(2) * (c1 - g) / d});
        }
        Scalar twol = Scalar(2 * dim.n() - 2);
        if (g != twol) {
            Scalar d = twol - g;
            parts.push_back({Scalar(2) * (Scalar(2) * c0 + g + twol) / d,
                             (Scalar(4) * c1 - Scalar(4) * g) / d});
        }
        // Branch switches: abar crosses -(1-beta)N or -(1-beta)gamma.
        parts.push_back({Scalar(0), Scalar(0)});
        parts.push_back({c0 + N, c1 - N});
        parts.push_back({c0 + g, c1 - g});
    } else {
        // Attainability switches where abar crosses -(1-beta)N.
        parts.push_back({Scalar(0), Scalar(0)});
        parts.push_back({c0 + N, c1 - N});
    }
    return parts;
}

// ---------------------------------------------------------------------------
// Infinity side. Per candidate the admissible set is an open half-line whose
// threshold is exact; the union over the family is the half-line above the
// minimal threshold.
// ---------------------------------------------------------------------------

enum class InfinityPath { GrowthOnly, DecayFinite, DecayUnbounded };

Candidate eval_infinity_candidate(const EnvelopePiece& piece, const Scalar& beta,
                                  InfinityPath path, const Scalar& gamma_fin,
                                  const Dim& dim) {
    Candidate c;
    c.beta = beta;
    c.beta_attained = !at_open_endpoint(piece, beta);
    Scalar floor_q = q_floor_at(beta);
    Scalar N = dim.N();
    Scalar a2 = -(Scalar(1) - beta) * N;                           // -(1-beta)N
    Scalar a1l = Scalar(-2) * (N - Scalar(1)) * (Scalar(1) - beta);  // -2(N-1)(1-beta)

    auto halfline = [](const Scalar& t) {
        return QInterval(ExtScalar(t), ExtScalar::pos_inf());
    };

    if (!piece.alpha_unbounded) {
        Scalar alow = piece.c0 + piece.c1 * beta;
        switch (path) {
            case InfinityPath::GrowthOnly:
                c.interval = halfline(exps::thm1_threshold(alow, beta, dim));
                c.single_certified = true;
                c.alpha_report = ExtScalar(alow);
                break;
            case InfinityPath::DecayFinite:
                c.interval = halfline(exps::thm2_threshold(alow, beta, gamma_fin, dim));
                c.single_certified = true;
                c.alpha_report = ExtScalar(alow);
                c.gamma_report = ExtScalar(gamma_fin);
                break;
            case InfinityPath::DecayUnbounded: {
                c.interval = halfline(floor_q);
                c.alpha_report = ExtScalar(alow);
                c.gamma_report = ExtScalar::neg_inf();
                // A finite decay exponent certifies the bare floor whenever
                // beta < 1/2 (push gamma very negative) or alow <= -(1-beta)N.
                std::optional<Scalar> gw;
                if (beta < Scalar(1) / Scalar(2)) {
                    Scalar g1 = (Scalar(2) * alow + N) / (Scalar(2) * beta - Scalar(1));
                    Scalar g2 = (Scalar(2) - Scalar(2) * N - Scalar(4) * alow) /
                                (Scalar(3) - Scalar(4) * beta);
                    gw = min(Scalar(2), min(g1, g2));
                } else if (alow <= a2) {
                    gw = beta == Scalar(1)
                             ? Scalar(2)
                             : min(Scalar(2), Scalar(2) - Scalar(2) * N -
                                                        Scalar(2) * alow / (Scalar(1) - beta));
                }
                if (gw.has_value() &&
                    exps::thm2_threshold(alow, beta, *gw, dim) == floor_q) {
                    c.single_certified = true;
                    c.gamma_report = ExtScalar(*gw);
                }
                break;
            }
        }
        return c;
    }

    // Unbounded alpha: pushing alpha down always reaches the bare floor, and
    // an exact finite witness alpha exists on every path.
    c.interval = halfline(floor_q);
    switch (path) {
        case InfinityPath::GrowthOnly: {
            Scalar aw = exps::alpha_star(beta, dim);
            c.alpha_report = ExtScalar(aw);
            c.single_certified = exps::thm1_threshold(aw, beta, dim) == floor_q;
            break;
        }
        case InfinityPath::DecayFinite: {
            Scalar aw = min(a2, a1l);
            c.alpha_report = ExtScalar(aw);
            c.gamma_report = ExtScalar(gamma_fin);
            c.single_certified = exps::thm2_threshold(aw, beta, gamma_fin, dim) == floor_q;
            break;
        }
        case InfinityPath::DecayUnbounded: {
            Scalar aw = min(a2, a1l);
            c.alpha_report = ExtScalar(aw);
            c.gamma_report = ExtScalar(Scalar(2));
            c.single_certified = exps::thm2_threshold(aw, beta, Scalar(2), dim) == floor_q;
            break;
        }
    }
    if (!c.single_certified) c.alpha_report = ExtScalar::neg_inf();
    return c;
}

std::vector<AffineFn> infinity_parts(const EnvelopePiece& piece, InfinityPath path,
                                     const Scalar& gamma_fin, const Dim& dim) {
    std::vector<AffineFn> parts{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}};
    if (piece.alpha_unbounded) return parts;
    const Scalar& c0 = piece.c0;
    const Scalar& c1 = piece.c1;
    Scalar N = dim.N();
    if (path == InfinityPath::GrowthOnly) {
        Scalar d = N - Scalar(2);
        parts.push_back({Scalar(2) * (c0 + N) / d, Scalar(2) * (c1 - Scalar(2)) / d});
    } else if (path == InfinityPath::DecayFinite) {
        Scalar g = gamma_fin;
        Scalar d1 = N - g;
        parts.push_back({Scalar(2) * (c0 + N) / d1, Scalar(2) * (c1 - g) / d1});
        Scalar twol = Scalar(2 * dim.n() - 2);
        Scalar d2 = twol - g;
        parts.push_back({Scalar(2) * (Scalar(2) * c0 + g + twol) / d2,
                         (Scalar(4) * c1 - Scalar(4) * g) / d2});
    } else {
        // Attainability switches where alow crosses -(1-beta)N.
        parts.push_back({Scalar(0), Scalar(0)});
        parts.push_back({c0 + N, c1 - N});
    }
    return parts;
}

// Hull + representative selection shared by the two sides.
SideResult assemble(const std::vector<Candidate>& cands, const std::string& rule) {
    QInterval hull = QInterval::empty_interval();
    for (const auto& c : cands) hull = hull.hull(c.interval);
    if (hull.empty()) throw EmptyAdmissible("no growth candidate yields admissible exponents");

    SideResult r;
    r.interval = hull;
    r.rule = rule;
    for (const auto& c : cands) {
        if (c.beta_attained && c.single_certified && c.interval.same_as(hull)) {
            r.alpha = c.alpha_report;
            r.beta = c.beta;
            r.gamma = c.gamma_report;
            r.limit_flag = false;
            return r;
        }
    }
    r.limit_flag = true;
    const Candidate* best = nullptr;
    for (const auto& c : cands) {
        if (c.interval.empty() || !(c.interval.lo == hull.lo)) continue;
        if (best == nullptr || (!best->beta_attained && c.beta_attained) ||
            (best->beta_attained == c.beta_attained && c.interval.hi > best->interval.hi))
            best = &c;
    }
    if (best == nullptr) {
        // Hull endpoints come from different candidates; report the widest one.
        for (const auto& c : cands)
            if (!c.interval.empty() && (best == nullptr || c.interval.hi > best->interval.hi))
                best = &c;
    }
    r.alpha = best->alpha_report;
    r.beta = best->beta;
    r.gamma = best->gamma_report;
    return r;
}

}  // namespace

OriginSpec OriginSpec::from_potentials(const pot::Potential& v, const pot::Potential& k) {
    OriginSpec s;
    s.env = pot::envelope_origin(v, k);
    s.gamma_cap = pot::gamma_caps(v).origin_cap;
    return s;
}

OriginSpec OriginSpec::from_pair(const Scalar& alpha, const Scalar& beta,
                                 std::optional<ExtScalar> gamma_cap) {
    if (beta < Scalar(0) || beta > Scalar(1))
        throw InvalidSpec("growth candidate has beta outside [0,1]");
    OriginSpec s;
    s.env.side = pot::Potential::Side::Origin;
    s.env.pieces.push_back({beta, beta, false, false, false, alpha, Scalar(0)});
    s.gamma_cap = std::move(gamma_cap);
    return s;
}

InfinitySpec InfinitySpec::from_potentials(const pot::Potential& v, const pot::Potential& k) {
    InfinitySpec s;
    s.env = pot::envelope_infinity(v, k);
    s.gamma_floor = pot::gamma_caps(v).infinity_floor;
    return s;
}

InfinitySpec InfinitySpec::from_pair(const Scalar& alpha, const Scalar& beta,
                                     std::optional<ExtScalar> gamma_floor) {
    if (beta < Scalar(0) || beta > Scalar(1))
        throw InvalidSpec("growth candidate has beta outside [0,1]");
    InfinitySpec s;
    s.env.side = pot::Potential::Side::Infinity;
    s.env.pieces.push_back({beta, beta, false, false, false, alpha, Scalar(0)});
    s.gamma_floor = std::move(gamma_floor);
    return s;
}

SideResult origin_admissible(const OriginSpec& spec, const Dim& dim) {
    validate_envelope(spec.env);
    if (spec.env.empty())
        throw EmptyAdmissible("no growth candidates near the origin");

    OriginPath path = OriginPath::GrowthOnly;
    Scalar gamma_fin(2);
    if (spec.gamma_cap.has_value()) {
        const ExtScalar& cap = *spec.gamma_cap;
        if (cap.is_neg_inf() || (cap.finite() && cap.fin() < Scalar(2)))
            throw InvalidSpec("origin decay cap must be at least 2");
        if (cap.is_pos_inf()) {
            path = OriginPath::DecayUnbounded;
        } else if (cap.fin() > Scalar(2)) {
            path = OriginPath::DecayFinite;
            gamma_fin = cap.fin();
        }
    }
    std::string rule = path == OriginPath::GrowthOnly ? "growth_only" : "growth_and_decay";

    std::vector<Candidate> cands;
    for (const auto& piece : spec.env.pieces) {
        auto parts = origin_parts(piece, path, gamma_fin, dim);
        for (const Scalar& b : candidate_betas(piece, parts))
            cands.push_back(eval_origin_candidate(piece, b, path, gamma_fin, dim));
    }
    return assemble(cands, rule);
}

SideResult infinity_admissible(const InfinitySpec& spec, const Dim& dim) {
    validate_envelope(spec.env);
    if (spec.env.empty())
        throw EmptyAdmissible("no growth candidates near infinity");

    InfinityPath path = InfinityPath::GrowthOnly;
    Scalar gamma_fin(2);
    if (spec.gamma_floor.has_value()) {
        const ExtScalar& fl = *spec.gamma_floor;
        if (fl.is_pos_inf() || (fl.finite() && fl.fin() > Scalar(2)))
            throw InvalidSpec("infinity decay floor must be at most 2");
        if (fl.is_neg_inf()) {
            path = InfinityPath::DecayUnbounded;
        } else {
            path = InfinityPath::DecayFinite;
            gamma_fin = fl.fin();
        }
    }
    std::string rule = path == InfinityPath::GrowthOnly ? "growth_only" : "growth_and_decay";

    std::vector<Candidate> cands;
    for (const auto& piece : spec.env.pieces) {
        auto parts = infinity_parts(piece, path, gamma_fin, dim);
        for (const Scalar& b : candidate_betas(piece, parts))
            cands.push_back(eval_infinity_candidate(piece, b, path, gamma_fin, dim));
    }
    return assemble(cands, rule);
}

EmbeddingVerdict combine(const QInterval& q1, const QInterval& q2) {
    EmbeddingVerdict v;
    v.q1 = q1;
    v.q2 = q2;
    v.single_q = q1.intersect(q2);
    v.sum_admissible = !q1.empty() && !q2.empty();
    v.single_admissible = !v.single_q.empty();
    return v;
}

EmbeddingVerdict best_verdict(const OriginSpec& origin, const InfinitySpec& infinity,
                              const Dim& dim) {
    std::optional<SideResult> ro, ri;
    try {
        ro = origin_admissible(origin, dim);
    } catch (const EmptyAdmissible&) {
    }
    try {
        ri = infinity_admissible(infinity, dim);
    } catch (const EmptyAdmissible&) {
    }
    EmbeddingVerdict v = combine(ro ? ro->interval : QInterval::empty_interval(),
                                 ri ? ri->interval : QInterval::empty_interval());
    v.origin = std::move(ro);
    v.infinity = std::move(ri);
    return v;
}

exps::GrowthPair normalize_pair(const Scalar& alpha, const Scalar& beta,
                                const Scalar& gamma) {
    if (beta >= Scalar(0)) return {alpha, beta};
    return {alpha - beta * gamma, Scalar(0)};
}

bool nested_candidates_check(const OriginSpec& spec, const Dim& dim, int grid) {
    if (grid < 2) throw PreconditionViolated("nested_candidates_check needs grid >= 2");
    validate_envelope(spec.env);

    OriginPath path = OriginPath::GrowthOnly;
    Scalar gamma_fin(2);
    if (spec.gamma_cap.has_value()) {
        if (spec.gamma_cap->is_pos_inf())
            path = OriginPath::DecayUnbounded;
        else if (spec.gamma_cap->fin() > Scalar(2)) {
            path = OriginPath::DecayFinite;
            gamma_fin = spec.gamma_cap->fin();
        }
    }

    std::vector<QInterval> ivs;
    for (const auto& piece : spec.env.pieces) {
        Scalar width = piece.beta_hi - piece.beta_lo;
        for (int i = 0; i < grid; ++i) {
            Scalar t = (Scalar(2 * i + 1)) / Scalar(2 * grid);
            Scalar beta = piece.beta_lo + width * t;
            Candidate c = eval_origin_candidate(piece, beta, path, gamma_fin, dim);
            if (!c.interval.empty()) ivs.push_back(c.interval);
        }
    }
    auto inside = [](const QInterval& a, const QInterval& b) {
        return a.lo >= b.lo && a.hi <= b.hi;
    };
    for (std::size_t i = 0; i < ivs.size(); ++i)
        for (std::size_t j = i + 1; j < ivs.size(); ++j)
            if (!inside(ivs[i], ivs[j]) && !inside(ivs[j], ivs[i])) return false;
    return true;
}

}  // namespace sobemb::engine

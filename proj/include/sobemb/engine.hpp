#pragma once

#include <optional>
#include <string>

#include "sobemb/exponents.hpp"
#include "sobemb/interval.hpp"
#include "sobemb/potentials.hpp"
#include "sobemb/scalar.hpp"

namespace sobemb::engine {

// Admissible growth data near the origin: an envelope of usable (alpha, beta)
// pairs plus an optional upper bound on decay exponents gamma usable there
// (present and > 2 activates the decay-refined criterion; +inf means every
// finite gamma is usable).
struct OriginSpec {
    potentials::GrowthEnvelope env;
    std::optional<ExtScalar> gamma_cap;

    static OriginSpec from_potentials(const potentials::Potential& v,
                                      const potentials::Potential& k);
    // Single fixed growth pair (beta must lie in [0,1]).
    static OriginSpec from_pair(const Scalar& alpha, const Scalar& beta,
                                std::optional<ExtScalar> gamma_cap = std::nullopt);
};

// Admissible growth data near infinity: envelope plus an optional lower bound
// on the decay exponents gamma usable there (present and <= 2 activates the
// decay-refined criterion; -inf means every gamma <= 2 is usable).
struct InfinitySpec {
    potentials::GrowthEnvelope env;
    std::optional<ExtScalar> gamma_floor;

    static InfinitySpec from_potentials(const potentials::Potential& v,
                                        const potentials::Potential& k);
    static InfinitySpec from_pair(const Scalar& alpha, const Scalar& beta,
                                  std::optional<ExtScalar> gamma_floor = std::nullopt);
};

// Outcome for one side. `interval` is the union of the admissible-exponent
// intervals over every usable candidate. When `limit_flag` is false a single
// candidate (reported in alpha/beta/gamma) produces exactly this interval;
// when true the interval is only realized as a limit of the candidate family
// and the reported parameters are the limiting values.
struct SideResult {
    QInterval interval;
    std::string rule;  // "growth_only" or "growth_and_decay"
    ExtScalar alpha{Scalar(0)};
    Scalar beta{0};
    std::optional<ExtScalar> gamma;
    bool limit_flag = false;
};

struct EmbeddingVerdict {
    QInterval q1;        // sum-space component controlled near the origin
    QInterval q2;        // sum-space component controlled near infinity
    QInterval single_q;  // q1 intersected with q2
    bool sum_admissible = false;
    bool single_admissible = false;
    std::optional<SideResult> origin;
    std::optional<SideResult> infinity;
};

// Largest q-interval for the origin side. Uses the decay-refined criterion
// exactly when gamma_cap is present and exceeds 2 (with the largest usable
// gamma); otherwise the growth-only criterion. Throws EmptyAdmissible when no
// candidate yields a nonempty interval.
SideResult origin_admissible(const OriginSpec& spec, const Dim& dim);

// Smallest admissible threshold for the infinity side; the interval is the
// open half-line above it. Uses the decay-refined criterion exactly when
// gamma_floor is present (with the smallest usable gamma); otherwise the
// growth-only criterion. Throws EmptyAdmissible when the spec holds no
// candidates at all.
SideResult infinity_admissible(const InfinitySpec& spec, const Dim& dim);

// Assembles a verdict from precomputed side intervals.
EmbeddingVerdict combine(const QInterval& q1, const QInterval& q2);

// Runs both sides, tolerating per-side emptiness: a side that admits no
// exponents leaves its interval empty and the corresponding admissibility
// flag false instead of escaping as an exception.
EmbeddingVerdict best_verdict(const OriginSpec& origin, const InfinitySpec& infinity,
                              const Dim& dim);

// A growth pair with beta < 0 is interchangeable with (alpha - beta*gamma, 0)
// once the potential decays like r^{-gamma}; pairs with beta in [0,1] pass
// through unchanged.
exponents::GrowthPair normalize_pair(const Scalar& alpha, const Scalar& beta,
                                     const Scalar& gamma);

// Debug aid: samples the candidate family of the origin side and reports
// whether the produced intervals form a chain under inclusion (the situation
// in which the interval hull is exactly the union).
bool nested_candidates_check(const OriginSpec& spec, const Dim& dim, int grid = 33);

}  // namespace sobemb::engine

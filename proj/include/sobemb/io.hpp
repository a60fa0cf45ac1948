#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sobemb/engine.hpp"
#include "sobemb/interval.hpp"
#include "sobemb/potentials.hpp"
#include "sobemb/region.hpp"
#include "sobemb/scalar.hpp"

namespace sobemb::io {

using json = nlohmann::json;

// Scalars serialize as a JSON number when that is lossless (integers within
// double range, inexact doubles) and as an exact "p/q" string otherwise.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// Extended scalars additionally admit the strings "inf" and "-inf".
json ext_to_json(const ExtScalar& e);
ExtScalar ext_from_json(const json& j);

// {lo, hi, lo_exact_rational?, hi_exact_rational?}; the *_exact_rational
// side channels preserve endpoints like 10/3 across round-trips.
json interval_to_json(const QInterval& iv);
QInterval interval_from_json(const json& j);

// {variant: ..., ...params}; truncations nest their inner document.
json potential_to_json(const potentials::Potential& p);
potentials::Potential potential_from_json(const json& j);

// Explicit per-side engine parameters overriding the symbolic derivation.
struct SideOverride {
    Scalar alpha{0};
    Scalar beta{0};
    std::optional<ExtScalar> gamma;  // decay cap (origin) or floor (infinity)
};

// Problem document: dimension plus either symbolic potentials (v, k) or
// per-side overrides; each side must be resolvable from one of the two.
struct ProblemSpec {
    int dimension = 3;
    std::optional<potentials::Potential> v;
    std::optional<potentials::Potential> k;
    std::optional<SideOverride> origin_override;
    std::optional<SideOverride> infinity_override;

    static ProblemSpec from_json(const json& j);
    json to_json() const;

    engine::OriginSpec origin_spec() const;
    engine::InfinitySpec infinity_spec() const;
};

// Verdict plus provenance, versioned for reproducibility.
struct VerdictDocument {
    int schema_version = 1;
    engine::EmbeddingVerdict verdict;
    std::vector<std::string> targets;  // "sum_space", "single_space"
    std::vector<std::string> notes;

    static VerdictDocument from_json(const json& j);
    json to_json() const;
};

VerdictDocument make_document(const engine::EmbeddingVerdict& v);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// One CSV per curve, columns alpha,q,label.
void write_boundary_csv(const std::string& path, const region::BoundaryCurve& curve);
// Single SVG holding every curve as a labeled polyline.
void write_region_svg(const std::string& path, const std::vector<region::BoundaryCurve>& curves,
                      const std::string& title);

}  // namespace sobemb::io

#include "sobemb/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "sobemb/errors.hpp"

namespace sobemb::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidSpec(what); }

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    if (s.exact()) {
        const Rat& r = s.rat();
        if (r.den == 1) return json(r.num);
        return json(r.str());
    }
    return json(s.value());
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
    if (j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            bad("integer out of range: " + j.dump());
        return Scalar(static_cast<std::int64_t>(u));
    }
    if (j.is_number_float()) return Scalar::from_double(j.get<double>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    bad("expected a number or numeric string, got " + j.dump());
}

json ext_to_json(const ExtScalar& e) {
    if (e.is_pos_inf()) return json("inf");
    if (e.is_neg_inf()) return json("-inf");
    return scalar_to_json(e.fin());
}

ExtScalar ext_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return ExtScalar::pos_inf();
        if (s == "-inf") return ExtScalar::neg_inf();
    }
    return ExtScalar(scalar_from_json(j));
}

namespace {

// Endpoints are emitted twice when exact and non-integral: once as a double
// for plain consumers and once as an exact rational side channel.
void put_endpoint(json& j, const char* key, const char* exact_key, const ExtScalar& e) {
    if (!e.finite()) {
        j[key] = e.is_pos_inf() ? "inf" : "-inf";
        return;
    }
    const Scalar& s = e.fin();
    j[key] = s.value();
    if (s.exact() && s.rat().den != 1) j[exact_key] = s.rat().str();
}

ExtScalar get_endpoint(const json& j, const char* key, const char* exact_key) {
    if (auto it = j.find(exact_key); it != j.end()) return ExtScalar(Scalar::parse(it->get<std::string>()));
    return ext_from_json(require(j, key));
}

}  // namespace

json interval_to_json(const QInterval& iv) {
    json j = json::object();
    put_endpoint(j, "lo", "lo_exact_rational", iv.lo);
    put_endpoint(j, "hi", "hi_exact_rational", iv.hi);
    return j;
}

QInterval interval_from_json(const json& j) {
    return QInterval(get_endpoint(j, "lo", "lo_exact_rational"),
                     get_endpoint(j, "hi", "hi_exact_rational"));
}

json potential_to_json(const potentials::Potential& p) {
    using K = potentials::Potential::Kind;
    json j = json::object();
    switch (p.kind()) {
        case K::Zero:
            j["variant"] = "zero";
            break;
        case K::Power:
            j["variant"] = "power";
            j["coeff"] = scalar_to_json(p.params().at(0));
            j["exponent"] = scalar_to_json(p.params().at(1));
            break;
        case K::ExpInvR:
            j["variant"] = "exp_inv_r";
            j["b"] = scalar_to_json(p.params().at(0));
            break;
        case K::ExpR:
            j["variant"] = "exp_r";
            j["a"] = scalar_to_json(p.params().at(0));
            break;
        case K::PowerExp:
            j["variant"] = "power_exp";
            j["d"] = scalar_to_json(p.params().at(0));
            j["b"] = scalar_to_json(p.params().at(1));
            break;
        case K::Truncated:
            j["variant"] = "truncated";
            j["radius"] = scalar_to_json(p.params().at(0));
            j["side"] =
                p.trunc_side() == potentials::Potential::Side::Origin ? "origin" : "infinity";
            j["inner"] = potential_to_json(p.term(0));
            break;
        case K::Sum:
            j["variant"] = "sum";
            j["terms"] = json::array({potential_to_json(p.term(0)), potential_to_json(p.term(1))});
            break;
    }
    return j;
}

potentials::Potential potential_from_json(const json& j) {
    using P = potentials::Potential;
    if (!j.is_object()) bad("potential document must be an object, got " + j.dump());
    const auto variant = require(j, "variant").get<std::string>();
    if (variant == "zero") return P::zero();
    if (variant == "power")
        return P::power(scalar_from_json(require(j, "coeff")),
                        scalar_from_json(require(j, "exponent")));
    if (variant == "exp_inv_r") return P::exp_inv_r(scalar_from_json(require(j, "b")));
    if (variant == "exp_r") return P::exp_r(scalar_from_json(require(j, "a")));
    if (variant == "power_exp")
        return P::power_exp(scalar_from_json(require(j, "d")), scalar_from_json(require(j, "b")));
    if (variant == "truncated") {
        const auto side_name = require(j, "side").get<std::string>();
        P::Side side;
        if (side_name == "origin")
            side = P::Side::Origin;
        else if (side_name == "infinity")
            side = P::Side::Infinity;
        else
            bad("truncation side must be 'origin' or 'infinity', got '" + side_name + "'");
        return P::truncated(potential_from_json(require(j, "inner")),
                            scalar_from_json(require(j, "radius")), side);
    }
    if (variant == "sum") {
        const json& terms = require(j, "terms");
        if (!terms.is_array() || terms.size() != 2)
            bad("'terms' must be an array of exactly two potentials");
        return P::sum(potential_from_json(terms[0]), potential_from_json(terms[1]));
    }
    bad("unknown potential variant '" + variant + "'");
}

namespace {

json override_to_json(const SideOverride& o, const char* gamma_key) {
    json j = json::object();
    j["alpha"] = scalar_to_json(o.alpha);
    j["beta"] = scalar_to_json(o.beta);
    if (o.gamma) j[gamma_key] = ext_to_json(*o.gamma);
    return j;
}

SideOverride override_from_json(const json& j, const char* gamma_key) {
    SideOverride o;
    o.alpha = scalar_from_json(require(j, "alpha"));
    o.beta = scalar_from_json(require(j, "beta"));
    if (auto it = j.find(gamma_key); it != j.end()) o.gamma = ext_from_json(*it);
    return o;
}

}  // namespace

ProblemSpec ProblemSpec::from_json(const json& j) {
    if (!j.is_object()) bad("problem document must be an object");
    if (auto it = j.find("schema_version"); it != j.end() && it->get<int>() != 1)
        bad("unsupported schema_version " + it->dump());
    ProblemSpec spec;
    spec.dimension = require(j, "dimension").get<int>();
    if (spec.dimension < 3) bad("dimension must be >= 3");
    if (auto it = j.find("v"); it != j.end()) spec.v = potential_from_json(*it);
    if (auto it = j.find("k"); it != j.end()) spec.k = potential_from_json(*it);
    if (auto it = j.find("origin_override"); it != j.end())
        spec.origin_override = override_from_json(*it, "gamma_cap");
    if (auto it = j.find("infinity_override"); it != j.end())
        spec.infinity_override = override_from_json(*it, "gamma_floor");
    const bool symbolic = spec.v.has_value() && spec.k.has_value();
    if (!symbolic && !spec.origin_override)
        bad("origin side unresolved: provide both 'v' and 'k', or 'origin_override'");
    if (!symbolic && !spec.infinity_override)
        bad("infinity side unresolved: provide both 'v' and 'k', or 'infinity_override'");
    if (spec.v.has_value() != spec.k.has_value())
        bad("'v' and 'k' must be given together");
    return spec;
}

json ProblemSpec::to_json() const {
    json j = json::object();
    j["schema_version"] = 1;
    j["dimension"] = dimension;
    if (v) j["v"] = potential_to_json(*v);
    if (k) j["k"] = potential_to_json(*k);
    if (origin_override) j["origin_override"] = override_to_json(*origin_override, "gamma_cap");
    if (infinity_override)
        j["infinity_override"] = override_to_json(*infinity_override, "gamma_floor");
    return j;
}

engine::OriginSpec ProblemSpec::origin_spec() const {
    if (origin_override)
        return engine::OriginSpec::from_pair(origin_override->alpha, origin_override->beta,
                                             origin_override->gamma);
    if (v && k) return engine::OriginSpec::from_potentials(*v, *k);
    bad("origin side unresolved");
}

engine::InfinitySpec ProblemSpec::infinity_spec() const {
    if (infinity_override)
        return engine::InfinitySpec::from_pair(infinity_override->alpha, infinity_override->beta,
                                               infinity_override->gamma);
    if (v && k) return engine::InfinitySpec::from_potentials(*v, *k);
    bad("infinity side unresolved");
}

namespace {

json side_params_to_json(const engine::SideResult& r) {
    json j = json::object();
    j["alpha"] = ext_to_json(r.alpha);
    j["beta"] = scalar_to_json(r.beta);
    if (r.gamma) j["gamma"] = ext_to_json(*r.gamma);
    j["limit"] = r.limit_flag;
    return j;
}

engine::SideResult side_params_from_json(const json& j, const std::string& rule,
                                         const QInterval& interval) {
    engine::SideResult r;
    r.interval = interval;
    r.rule = rule;
    r.alpha = ext_from_json(require(j, "alpha"));
    r.beta = scalar_from_json(require(j, "beta"));
    if (auto it = j.find("gamma"); it != j.end()) r.gamma = ext_from_json(*it);
    r.limit_flag = require(j, "limit").get<bool>();
    return r;
}

}  // namespace

json VerdictDocument::to_json() const {
    json j = json::object();
    j["schema_version"] = schema_version;
    j["q1_interval"] = interval_to_json(verdict.q1);
    if (verdict.q2.empty()) {
        j["q2_threshold"] = "none";
    } else {
        json t = json::object();
        put_endpoint(t, "value", "exact_rational", verdict.q2.lo);
        j["q2_threshold"] = t;
    }
    j["single_q"] = interval_to_json(verdict.single_q);
    json used = json::object();
    json chosen = json::object();
    if (verdict.origin) {
        used["origin"] = verdict.origin->rule;
        chosen["origin"] = side_params_to_json(*verdict.origin);
    }
    if (verdict.infinity) {
        used["infinity"] = verdict.infinity->rule;
        chosen["infinity"] = side_params_to_json(*verdict.infinity);
    }
    j["theorems_used"] = used;
    j["chosen_params"] = chosen;
    json targets_json = json::array();
    for (const auto& t : targets) targets_json.push_back(t);
    j["embedding_target"] = targets_json;
    json notes_json = json::array();
    for (const auto& n : notes) notes_json.push_back(n);
    j["notes"] = notes_json;
    return j;
}

VerdictDocument VerdictDocument::from_json(const json& j) {
    VerdictDocument doc;
    doc.schema_version = require(j, "schema_version").get<int>();
    if (doc.schema_version != 1) bad("unsupported schema_version");
    doc.verdict.q1 = interval_from_json(require(j, "q1_interval"));
    const json& t = require(j, "q2_threshold");
    if (t.is_string() && t.get<std::string>() == "none") {
        doc.verdict.q2 = QInterval::empty_interval();
    } else {
        ExtScalar lo = get_endpoint(t, "value", "exact_rational");
        doc.verdict.q2 = QInterval(lo, ExtScalar::pos_inf());
    }
    doc.verdict.single_q = interval_from_json(require(j, "single_q"));
    const json& used = require(j, "theorems_used");
    const json& chosen = require(j, "chosen_params");
    if (auto it = used.find("origin"); it != used.end())
        doc.verdict.origin = side_params_from_json(require(chosen, "origin"),
                                                   it->get<std::string>(), doc.verdict.q1);
    if (auto it = used.find("infinity"); it != used.end())
        doc.verdict.infinity = side_params_from_json(require(chosen, "infinity"),
                                                     it->get<std::string>(), doc.verdict.q2);
    for (const auto& target : require(j, "embedding_target")) {
        const auto name = target.get<std::string>();
        if (name == "sum_space") doc.verdict.sum_admissible = true;
        else if (name == "single_space") doc.verdict.single_admissible = true;
        else bad("unknown embedding target '" + name + "'");
        doc.targets.push_back(name);
    }
    if (auto it = j.find("notes"); it != j.end())
        for (const auto& n : *it) doc.notes.push_back(n.get<std::string>());
    return doc;
}

VerdictDocument make_document(const engine::EmbeddingVerdict& v) {
    VerdictDocument doc;
    doc.verdict = v;
    if (v.sum_admissible) doc.targets.push_back("sum_space");
    if (v.single_admissible) doc.targets.push_back("single_space");
    auto describe = [](const char* side, const engine::SideResult& r) {
        std::string s = std::string(side) + ": " + r.rule + " at alpha=" + r.alpha.str() +
                        ", beta=" + r.beta.str();
        if (r.gamma) s += ", gamma=" + r.gamma->str();
        if (r.limit_flag) s += " (interval realized only in the limit of the candidate family)";
        return s;
    };
    if (v.origin) doc.notes.push_back(describe("origin", *v.origin));
    if (v.infinity) doc.notes.push_back(describe("infinity", *v.infinity));
    if (!v.sum_admissible)
        doc.notes.push_back("no admissible exponent q: at least one side admits none");
    else if (!v.single_admissible)
        doc.notes.push_back("sum-space exponents exist but the two intervals do not overlap");
    return doc;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "' for reading");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        bad("parse error in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) bad("write to '" + path + "' failed");
}

void write_boundary_csv(const std::string& path, const region::BoundaryCurve& curve) {
    std::ofstream out(path);
    if (!out) bad("cannot open '" + path + "' for writing");
    out << "alpha,q,label\n";
    for (const auto& v : curve.vertices) {
        std::string label = v.label;
        std::replace(label.begin(), label.end(), ',', ';');
        out << fmt_double(v.alpha) << ',' << fmt_double(v.q) << ',' << label << '\n';
    }
    if (!out) bad("write to '" + path + "' failed");
}

void write_region_svg(const std::string& path, const std::vector<region::BoundaryCurve>& curves,
                      const std::string& title) {
    double alo = std::numeric_limits<double>::infinity(), ahi = -alo;
    double qlo = alo, qhi = -alo;
    for (const auto& c : curves)
        for (const auto& v : c.vertices) {
            if (!std::isfinite(v.alpha) || !std::isfinite(v.q)) continue;
            alo = std::min(alo, v.alpha);
            ahi = std::max(ahi, v.alpha);
            qlo = std::min(qlo, v.q);
            qhi = std::max(qhi, v.q);
        }
    if (!(alo <= ahi) || !(qlo <= qhi)) throw EmptyRange("no finite vertices to draw");
    if (ahi - alo < 1e-9) { alo -= 0.5; ahi += 0.5; }
    if (qhi - qlo < 1e-9) { qlo -= 0.5; qhi += 0.5; }

    const double width = 640, height = 480, pad = 48;
    auto sx = [&](double a) { return pad + (a - alo) / (ahi - alo) * (width - 2 * pad); };
    auto sy = [&](double q) { return height - pad - (q - qlo) / (qhi - qlo) * (height - 2 * pad); };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

    std::ofstream out(path);
    if (!out) bad("cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"monospace\" font-size=\"14\">" << title << "</text>\n"
        << "<text x=\"" << width / 2 << "\" y=\"" << height - 8
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\">alpha</text>\n"
        << "<text x=\"14\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
        << "transform=\"rotate(-90 14 " << height / 2 << ")\">q</text>\n";
    std::size_t color_idx = 0;
    double legend_y = 40;
    for (const auto& c : curves) {
        const char* color = palette[color_idx++ % 5];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& v : c.vertices) {
            if (!std::isfinite(v.alpha) || !std::isfinite(v.q)) continue;
            out << sx(v.alpha) << ',' << sy(v.q) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - pad - 4 << "\" y=\"" << legend_y
            << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\" fill=\"" << color
            << "\">" << c.name << "</text>\n";
        legend_y += 14;
    }
    out << "</svg>\n";
    if (!out) bad("write to '" + path + "' failed");
}

}  // namespace sobemb::io

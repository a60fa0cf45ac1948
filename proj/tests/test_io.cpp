#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sobemb/engine.hpp"
#include "sobemb/errors.hpp"
#include "sobemb/io.hpp"
#include "sobemb/potentials.hpp"
#include "sobemb/region.hpp"

using namespace sobemb;
namespace eng = sobemb::engine;
namespace pot = sobemb::potentials;
using P = pot::Potential;
using io::json;

namespace {
std::string tmp_path(const char* leaf) { return std::string("/tmp/sobemb_io_test_") + leaf; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("scalar json: numbers stay numbers, non-dyadic rationals go exact") {
    CHECK(io::scalar_to_json(Scalar(7)) == json(7));
    CHECK(io::scalar_to_json(Scalar::parse("-3.5")) == json("-7/2"));
    CHECK(io::scalar_to_json(Scalar::parse("10/3")) == json("10/3"));
    CHECK(io::scalar_to_json(Scalar::inexact(1.25)) == json(1.25));
    for (const char* text : {"7", "-3.5", "10/3", "0.1"}) {
        Scalar s = Scalar::parse(text);
        Scalar back = io::scalar_from_json(io::scalar_to_json(s));
        CHECK(back == s);
        CHECK(back.exact() == s.exact());
    }
    CHECK_THROWS_AS(io::scalar_from_json(json::object()), InvalidSpec);
    CHECK_THROWS_AS(io::scalar_from_json(json("abc")), InvalidSpec);
}

TEST_CASE("extended scalar json: infinities as strings") {
    CHECK(io::ext_to_json(ExtScalar::pos_inf()) == json("inf"));
    CHECK(io::ext_to_json(ExtScalar::neg_inf()) == json("-inf"));
    CHECK(io::ext_from_json(json("inf")).is_pos_inf());
    CHECK(io::ext_from_json(json("-inf")).is_neg_inf());
    ExtScalar fin{Scalar::parse("5/2")};
    CHECK(io::ext_from_json(io::ext_to_json(fin)) == fin);
}

TEST_CASE("interval json keeps exact endpoints through the side channel") {
    QInterval iv(ExtScalar{Scalar::parse("10/3")}, ExtScalar{Scalar(6)});
    json j = io::interval_to_json(iv);
    CHECK(j.at("lo_exact_rational") == "10/3");
    CHECK(j.at("lo") == doctest::Approx(10.0 / 3));
    CHECK_FALSE(j.contains("hi_exact_rational"));  // 6 is already lossless
    QInterval back = io::interval_from_json(j);
    CHECK(back.same_as(iv));
    CHECK(back.lo.fin() == Scalar::parse("10/3"));

    QInterval half(ExtScalar{Scalar(2)}, ExtScalar::pos_inf());
    CHECK(io::interval_from_json(io::interval_to_json(half)).same_as(half));
    QInterval empty = QInterval::empty_interval();
    CHECK(io::interval_from_json(io::interval_to_json(empty)).empty());
}

TEST_CASE("potential json round-trips every variant") {
    std::vector<P> cases = {
        P::zero(),
        P::power(Scalar(2), Scalar::parse("-7/2")),
        P::exp_inv_r(Scalar::parse("1/2")),
        P::exp_r(Scalar(1)),
        P::power_exp(Scalar(2), Scalar(1)),
        P::truncated(P::power(Scalar(1), Scalar(-3)), Scalar(1), P::Side::Origin),
        P::sum(P::truncated(P::power(Scalar(1), Scalar(-3)), Scalar(1), P::Side::Origin),
               P::truncated(P::power(Scalar(1), Scalar(-5)), Scalar(1), P::Side::Infinity)),
    };
    for (const auto& p : cases) {
        json j = io::potential_to_json(p);
        P back = io::potential_from_json(j);
        CHECK(io::potential_to_json(back) == j);
    }
    CHECK_THROWS_AS(io::potential_from_json(json{{"variant", "mystery"}}), InvalidSpec);
}

TEST_CASE("problem documents validate their shape") {
    json good = {{"schema_version", 1},
                 {"dimension", 3},
                 {"v", {{"variant", "power"}, {"coeff", 1}, {"exponent", -1}}},
                 {"k", {{"variant", "power"}, {"coeff", 1}, {"exponent", 0}}}};
    auto spec = io::ProblemSpec::from_json(good);
    CHECK(spec.dimension == 3);
    auto verdict = eng::best_verdict(spec.origin_spec(), spec.infinity_spec(), Dim(3));
    CHECK(verdict.single_q.lo.fin() == Scalar::parse("10/3"));
    CHECK(io::ProblemSpec::from_json(spec.to_json()).to_json() == spec.to_json());

    json bad_version = good;
    bad_version["schema_version"] = 2;
    CHECK_THROWS_AS(io::ProblemSpec::from_json(bad_version), InvalidSpec);

    json bad_dim = good;
    bad_dim["dimension"] = 2;
    CHECK_THROWS_AS(io::ProblemSpec::from_json(bad_dim), InvalidSpec);

    json v_only = good;
    v_only.erase("k");
    CHECK_THROWS_AS(io::ProblemSpec::from_json(v_only), InvalidSpec);

    json nothing = {{"schema_version", 1}, {"dimension", 3}};
    CHECK_THROWS_AS(io::ProblemSpec::from_json(nothing), InvalidSpec);

    json overrides = {{"schema_version", 1},
                      {"dimension", 3},
                      {"origin_override", {{"alpha", 0}, {"beta", 0}, {"gamma_cap", "inf"}}},
                      {"infinity_override", {{"alpha", 0}, {"beta", 0}, {"gamma_floor", -1}}}};
    auto ov = io::ProblemSpec::from_json(overrides);
    CHECK(ov.origin_override->gamma.value().is_pos_inf());
    CHECK(ov.infinity_override->gamma.value() == ExtScalar(Scalar(-1)));
    CHECK(io::ProblemSpec::from_json(ov.to_json()).to_json() == ov.to_json());
}

TEST_CASE("verdict documents round-trip with exact provenance") {
    json spec_json = {{"schema_version", 1},
                      {"dimension", 3},
                      {"v", {{"variant", "power"}, {"coeff", 1}, {"exponent", -1}}},
                      {"k", {{"variant", "power"}, {"coeff", 1}, {"exponent", 0}}}};
    auto spec = io::ProblemSpec::from_json(spec_json);
    auto verdict = eng::best_verdict(spec.origin_spec(), spec.infinity_spec(), Dim(3));
    auto doc = io::make_document(verdict);
    json j = doc.to_json();
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("q2_threshold").at("exact_rational") == "10/3");
    CHECK(j.at("single_q").at("hi") == 6.0);
    auto targets = j.at("embedding_target");
    CHECK(std::find(targets.begin(), targets.end(), "sum_space") != targets.end());
    CHECK(std::find(targets.begin(), targets.end(), "single_space") != targets.end());

    auto back = io::VerdictDocument::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.verdict.q1.same_as(verdict.q1));
    CHECK(back.verdict.q2.same_as(verdict.q2));
    CHECK(back.verdict.single_q.same_as(verdict.single_q));
    CHECK(back.verdict.sum_admissible == verdict.sum_admissible);
}

TEST_CASE("json files write and read back") {
    json j = {{"a", 1}, {"b", "10/3"}};
    auto path = tmp_path("roundtrip.json");
    io::write_json_file(path, j);
    CHECK(io::read_json_file(path) == j);
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::read_json_file(tmp_path("missing.json")), InvalidSpec);
}

TEST_CASE("boundary csv has a header, one row per vertex, no stray commas") {
    auto spec = region::RegionSpec::make(Scalar(0), Scalar(2), Dim(3));
    auto curves = region::boundary_export(spec, {Scalar(-4), Scalar(1)}, 11);
    REQUIRE(!curves.empty());
    auto path = tmp_path("curve.csv");
    io::write_boundary_csv(path, curves.front());
    std::string text = slurp(path);
    std::remove(path.c_str());
    CHECK(text.rfind("alpha,q,label\n", 0) == 0);
    std::size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == curves.front().vertices.size() + 1);
    // every row is exactly three fields even when labels name two constraints
    std::istringstream rows(text);
    std::string row;
    while (std::getline(rows, row)) {
        CHECK(std::count(row.begin(), row.end(), ',') == 2);
    }
}

TEST_CASE("region svg embeds the title and one polyline per curve") {
    auto spec = region::RegionSpec::make(Scalar(0), Scalar::parse("7/2"), Dim(3));
    auto curves = region::boundary_export(spec, {Scalar(-4), Scalar(1)}, 33);
    auto path = tmp_path("region.svg");
    io::write_region_svg(path, curves, "admissible region demo");
    std::string text = slurp(path);
    std::remove(path.c_str());
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("admissible region demo") != std::string::npos);
    std::size_t polylines = 0, at = 0;
    while ((at = text.find("<polyline", at)) != std::string::npos) {
        ++polylines;
        at += 9;
    }
    CHECK(polylines == curves.size());
}

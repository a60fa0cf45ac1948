// Command-line front end: verdict computation from problem documents, region
// boundary export, worked-example reproduction, and the verification suites.
//
// Exit codes: 0 success, 1 input error, 2 embedding inadmissible, 3 mismatch
// (example disagrees with its catalog expectation, or a verification check
// fails).

#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sobemb/engine.hpp"
#include "sobemb/errors.hpp"
#include "sobemb/io.hpp"
#include "sobemb/potentials.hpp"
#include "sobemb/region.hpp"
#include "sobemb/scalar.hpp"
#include "sobemb/verify.hpp"

namespace {

namespace eng = sobemb::engine;
namespace io = sobemb::io;
namespace pot = sobemb::potentials;
namespace reg = sobemb::region;
namespace ver = sobemb::verify;
using sobemb::Dim;
using sobemb::Scalar;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInadmissible = 2;
constexpr int kMismatch = 3;

int run_verdict(const std::string& spec_path, const std::string& out_path) {
    auto spec = io::ProblemSpec::from_json(io::read_json_file(spec_path));
    Dim dim(spec.dimension);
    auto verdict = eng::best_verdict(spec.origin_spec(), spec.infinity_spec(), dim);
    auto doc = io::make_document(verdict);
    auto j = doc.to_json();
    std::printf("%s\n", j.dump(2).c_str());
    if (!out_path.empty()) io::write_json_file(out_path, j);
    return verdict.sum_admissible ? kOk : kInadmissible;
}

int run_region(const std::string& beta, const std::string& gamma, int dim_n,
               const std::string& alpha_range, const std::string& format,
               const std::string& out_path, int samples) {
    auto colon = alpha_range.find(':');
    if (colon == std::string::npos)
        throw sobemb::InvalidSpec("--alpha expects LO:HI, got '" + alpha_range + "'");
    Scalar alpha_lo = Scalar::parse(alpha_range.substr(0, colon));
    Scalar alpha_hi = Scalar::parse(alpha_range.substr(colon + 1));
    auto spec = reg::RegionSpec::make(Scalar::parse(beta), Scalar::parse(gamma), Dim(dim_n));
    auto curves = reg::boundary_export(spec, {alpha_lo, alpha_hi}, samples);
    const std::string tag = reg::case_tag_name(spec.case_tag);
    if (format == "csv") {
        for (const auto& curve : curves) {
            std::string path = out_path + "_" + tag + "_" + curve.name + ".csv";
            io::write_boundary_csv(path, curve);
            std::printf("wrote %s (%zu vertices)\n", path.c_str(), curve.vertices.size());
        }
    } else if (format == "svg") {
        std::string path = out_path + "_" + tag + ".svg";
        std::string title = "admissible (alpha,q) region: beta=" + spec.beta.str() +
                            " gamma=" + spec.gamma.str() + " N=" + std::to_string(dim_n);
        io::write_region_svg(path, curves, title);
        std::printf("wrote %s (%zu curves)\n", path.c_str(), curves.size());
    } else {
        throw sobemb::InvalidSpec("--format must be csv or svg, got '" + format + "'");
    }
    return kOk;
}

int run_example(const std::string& name, const std::vector<std::string>& bindings) {
    const auto& ex = pot::find_example(name);
    pot::Params overrides;
    for (const auto& b : bindings) {
        auto eq = b.find('=');
        if (eq == std::string::npos)
            throw sobemb::InvalidSpec("--param expects KEY=VALUE, got '" + b + "'");
        overrides[b.substr(0, eq)] = Scalar::parse(b.substr(eq + 1));
    }
    auto params = pot::merge_params(ex, overrides);
    ex.validate(params);
    Dim dim(static_cast<int>(params.at("N").value()));
    auto v = ex.make_v(params);
    auto k = ex.make_k(params);
    auto verdict = eng::best_verdict(eng::OriginSpec::from_potentials(v, k),
                                     eng::InfinitySpec::from_potentials(v, k), dim);
    auto expected = ex.expected(params);

    bool match = verdict.q1.same_as(expected.q1) && verdict.q2.same_as(expected.q2) &&
                 verdict.single_q.same_as(expected.single_q);
    auto got_doc = io::make_document(verdict).to_json();
    if (match) {
        std::printf("%s\n", got_doc.dump(2).c_str());
        std::printf("example '%s': computed verdict matches the catalog expectation\n",
                    name.c_str());
        return kOk;
    }
    eng::EmbeddingVerdict want;
    want.q1 = expected.q1;
    want.q2 = expected.q2;
    want.single_q = expected.single_q;
    want.sum_admissible = !expected.q1.empty() && !expected.q2.empty();
    want.single_admissible = !expected.single_q.empty();
    std::printf("computed:\n%s\n", got_doc.dump(2).c_str());
    std::printf("expected:\n%s\n", io::make_document(want).to_json().dump(2).c_str());
    std::fprintf(stderr, "example '%s': computed verdict disagrees with the catalog\n",
                 name.c_str());
    return kMismatch;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
    auto report = ver::run_suite(suite, seed);
    std::printf("suite=%s seed=%llu\n", report.suite.c_str(),
                static_cast<unsigned long long>(report.seed));
    for (const auto& r : report.records) {
        std::printf("[%s] %-38s slack=%-12.4g %s\n", r.holds ? "PASS" : "FAIL", r.name.c_str(),
                    r.slack, r.detail.c_str());
    }
    if (!out_path.empty()) {
        io::json j;
        j["suite"] = report.suite;
        j["seed"] = report.seed;
        j["all_passed"] = report.all_passed();
        io::json records = io::json::array();
        for (const auto& r : report.records) {
            io::json rec;
            rec["name"] = r.name;
            rec["inputs"] = r.inputs;
            rec["lhs"] = r.lhs;
            rec["rhs"] = r.rhs;
            rec["slack"] = r.slack;
            rec["holds"] = r.holds;
            rec["detail"] = r.detail;
            records.push_back(rec);
        }
        j["records"] = records;
        io::write_json_file(out_path, j);
        std::printf("wrote %s\n", out_path.c_str());
    }
    return report.all_passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"admissible-exponent calculator for weighted radial embeddings"};
    app.require_subcommand(1);

    auto* verdict = app.add_subcommand(
        "verdict", "compute the admissible exponent intervals for a problem document");
    std::string spec_path, verdict_out;
    verdict->add_option("--spec", spec_path, "problem document (JSON)")->required();
    verdict->add_option("--out", verdict_out, "write the verdict document here as well");

    auto* regionc = app.add_subcommand("region", "export region boundary curves");
    std::string beta, gamma, alpha_range, format = "csv", region_out;
    int dim_n = 3, samples = 257;
    regionc->add_option("--beta", beta, "growth exponent beta (rational or decimal)")
        ->required();
    regionc->add_option("--gamma", gamma, "decay exponent gamma >= 2")->required();
    regionc->add_option("--dim", dim_n, "space dimension N >= 3")->required();
    regionc->add_option("--alpha", alpha_range, "alpha window LO:HI")->required();
    regionc->add_option("--format", format, "csv or svg");
    regionc->add_option("--out", region_out, "output path prefix")->required();
    regionc->add_option("--samples", samples, "vertices per curve (>= 2)");

    auto* example = app.add_subcommand("example", "reproduce a cataloged worked example");
    std::string example_name;
    std::vector<std::string> bindings;
    example->add_option("name", example_name, "catalog name")->required();
    example->add_option("--param", bindings, "override a parameter, KEY=VALUE");

    auto* verifyc = app.add_subcommand("verify", "run a verification suite");
    std::string suite, verify_out;
    std::uint64_t seed = ver::kDefaultSeed;
    verifyc->add_option("--suite", suite, "exponents|region|appendix|numerics|all")->required();
    verifyc->add_option("--seed", seed, "random seed (fixed default)");
    verifyc->add_option("--out", verify_out, "write the report document here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (app.got_subcommand(verdict)) return run_verdict(spec_path, verdict_out);
        if (app.got_subcommand(regionc))
            return run_region(beta, gamma, dim_n, alpha_range, format, region_out, samples);
        if (app.got_subcommand(example)) return run_example(example_name, bindings);
        if (app.got_subcommand(verifyc)) return run_verify(suite, seed, verify_out);
    } catch (const sobemb::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kInputError;
    }
    return kInputError;
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sobemb::verify {

// One verification check, possibly aggregating many random instances. For
// aggregate checks lhs/rhs/slack report the worst instance encountered and
// `inputs` records the sampling setup, so a failure is reproducible from the
// suite seed alone.
struct CheckRecord {
    std::string name;
    std::string inputs;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    bool holds = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;

    bool all_passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240309;

// suite is one of "exponents", "region", "appendix", "numerics", "all".
// Deterministic for a fixed seed. Throws InvalidSpec on an unknown name.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed = kDefaultSeed);

}  // namespace sobemb::verify

#pragma once

#include <stdexcept>
#include <string>

namespace sobemb {

// Base class for every typed error the library raises.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// gamma hit a pole of an exponent formula (denominator vanishes there).
struct UndefinedAtPole : Error {
    explicit UndefinedAtPole(const std::string& msg) : Error(msg) {}
};

// A requested range (e.g. an alpha window for boundary export) is degenerate.
struct EmptyRange : Error {
    explicit EmptyRange(const std::string& msg) : Error(msg) {}
};

// No candidate parameters yield a nonempty admissible interval.
struct EmptyAdmissible : Error {
    explicit EmptyAdmissible(const std::string& msg) : Error(msg) {}
};

// A spec document or parameter set violates its invariants.
struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

// The symbolic ratio/operation leaves the closed potential family.
struct UnsupportedCombination : Error {
    explicit UnsupportedCombination(const std::string& msg) : Error(msg) {}
};

// Quadrature produced a non-finite value.
struct NonIntegrable : Error {
    explicit NonIntegrable(const std::string& msg) : Error(msg) {}
};

// A log-log fit was requested on data it cannot represent.
struct DegenerateFit : Error {
    explicit DegenerateFit(const std::string& msg) : Error(msg) {}
};

// An operation that needs a nonzero function received the zero function.
struct ZeroFunction : Error {
    explicit ZeroFunction(const std::string& msg) : Error(msg) {}
};

// A documented precondition of an operation does not hold.
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

// The requested parameters fall outside the case split of an inequality.
struct BranchDomain : Error {
    explicit BranchDomain(const std::string& msg) : Error(msg) {}
};

}  // namespace sobemb

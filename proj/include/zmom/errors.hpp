// Error types thrown by the library. Each maps to one failure mode of the
// public API; the CLI translates them to exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace zmom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// zeta evaluation
struct PoleAtOne : Error {
    explicit PoleAtOne(const std::string& m = "evaluation point coincides with the pole at s = 1") : Error(m) {}
};
struct OutOfValidatedRegion : Error {
    explicit OutOfValidatedRegion(const std::string& m) : Error(m) {}
};
struct NearZeroOfZeta : Error {
    explicit NearZeroOfZeta(const std::string& m = "log-derivative requested too close to a zero of zeta") : Error(m) {}
};
struct DomainTooSmall : Error {
    explicit DomainTooSmall(const std::string& m = "argument below the validated domain") : Error(m) {}
};
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& m) : Error(m) {}
};

// zero location
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& m) : Error(m) {}
};
struct LostBracket : Error {
    explicit LostBracket(const std::string& m) : Error(m) {}
};
struct BeyondCertifiedHeight : Error {
    explicit BeyondCertifiedHeight(const std::string& m) : Error(m) {}
};
struct AuditFailed : Error {
    AuditFailed(const std::string& m, double height) : Error(m), offending_height(height) {}
    double offending_height;
};
struct CorruptCache : Error {
    explicit CorruptCache(const std::string& m) : Error(m) {}
};
struct VersionMismatch : Error {
    explicit VersionMismatch(const std::string& m) : Error(m) {}
};

// moments / asymptotics
struct EvaluationFailure : Error {
    explicit EvaluationFailure(const std::string& m) : Error(m) {}
};
struct AlphaOutOfRange : Error {
    explicit AlphaOutOfRange(const std::string& m) : Error(m) {}
};
struct PoleUncancelled : Error {
    explicit PoleUncancelled(const std::string& m) : Error(m) {}
};
struct OutsideRegion : Error {
    explicit OutsideRegion(const std::string& m) : Error(m) {}
};
struct OutsideExpansionZone : Error {
    explicit OutsideExpansionZone(const std::string& m) : Error(m) {}
};
struct ChainStepFailed : Error {
    explicit ChainStepFailed(const std::string& m) : Error(m) {}
};
struct EmptyGrid : Error {
    explicit EmptyGrid(const std::string& m = "empty evaluation grid") : Error(m) {}
};

} // namespace zmom

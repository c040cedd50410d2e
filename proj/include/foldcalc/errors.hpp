#pragma once

#include <stdexcept>
#include <string>

namespace foldcalc {

// Base for all recoverable domain errors raised by the calculus.
// The CLI maps these to exit code 1; usage errors exit with 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChainConditionViolated : DomainError {
    using DomainError::DomainError;
};
struct InvalidSummand : DomainError {
    using DomainError::DomainError;
};
struct InvalidCount : DomainError {
    using DomainError::DomainError;
};
struct InequalityViolated : DomainError {
    using DomainError::DomainError;
};
struct SpinTwistUnavailable : DomainError {
    using DomainError::DomainError;
};
struct UnrealizableClass : DomainError {
    using DomainError::DomainError;
};
struct OrderViolation : DomainError {
    using DomainError::DomainError;
};
struct UnknownLabel : DomainError {
    using DomainError::DomainError;
};
struct NotRound : DomainError {
    using DomainError::DomainError;
};
struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};
struct OutOfRange : DomainError {
    using DomainError::DomainError;
};
struct MissingProvenance : DomainError {
    using DomainError::DomainError;
};
struct UnspecifiedProduct : DomainError {
    using DomainError::DomainError;
};
struct SerializationError : DomainError {
    using DomainError::DomainError;
};

// Raised by run_script: wraps a step failure with its 1-based index.
struct ScriptStepError : DomainError {
    int step_index;
    ScriptStepError(int step, const std::string& what_inner)
        : DomainError("step " + std::to_string(step) + ": " + what_inner), step_index(step) {}
};

}  // namespace foldcalc

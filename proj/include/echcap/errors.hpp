#pragma once

#include <stdexcept>
#include <string>

namespace ech {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An edge violates a generator invariant (non-coprime direction, zero
// multiplicity, label out of range, h on an axis edge, duplicate direction).
struct InvalidEdgeError : Error {
    using Error::Error;
};

// Malformed formal-product or domain literal text.
struct ParseError : Error {
    using Error::Error;
};

// Product of two generators that share a hyperbolic orbit.
struct SharedHyperbolicError : Error {
    using Error::Error;
};

struct EmptyGeneratorError : Error {
    using Error::Error;
};

// The right-hand side of the order relation carried an h label.
struct HLabeledTargetError : Error {
    using Error::Error;
};

// A witness search target failed its minimality precondition.
struct NotMinimalError : Error {
    using Error::Error;
};

// A search ran out of its node budget. Distinct from a definitive
// "no witness exists" answer.
struct BudgetExceededError : Error {
    using Error::Error;
};

struct InvalidDomainError : Error {
    using Error::Error;
};

// Threshold bisection could not establish an excluded/not-excluded bracket.
struct NoBracketError : Error {
    using Error::Error;
};

// The verdict was observed to be non-monotone in the scale parameter.
struct MonotonicityError : Error {
    using Error::Error;
};

struct CertificateError : Error {
    using Error::Error;
};

}  // namespace ech

#pragma once

#include <stdexcept>
#include <string>

namespace mpsign {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual/JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A structural invariant of a domain value is violated.
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

// Requested computation needs a field tier that is not supported
// (quadratic extension towers over Q_2, non-p-adic extension bases).
struct UnsupportedTier : Error {
    explicit UnsupportedTier(const std::string& msg) : Error(msg) {}
};

// A caller broke an operation precondition (e.g. insufficient search depth).
struct ContractViolation : Error {
    explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

// Hilbert-90 witness requested for x = -1.
struct DegenerateWitness : Error {
    explicit DegenerateWitness(const std::string& msg) : Error(msg) {}
};

// Root number requested for an opaque summand that only carries paired data.
struct EpsilonUnavailable : Error {
    explicit EpsilonUnavailable(const std::string& msg) : Error(msg) {}
};

} // namespace mpsign

#pragma once

#include <stdexcept>
#include <string>

namespace supermorph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in algebras of different dimension (k or n).
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A generator/coordinate index is outside its valid range.
struct IndexError : Error {
    using Error::Error;
};

/// A parameter value is outside the operation's domain.
struct ArgumentError : Error {
    using Error::Error;
};

/// A value violates the invariant its type promises (e.g. nonvanishing minor).
struct ConstraintViolationError : Error {
    using Error::Error;
};

/// Operation is only defined for a specific generator count.
struct UnsupportedKError : Error {
    using Error::Error;
};

/// Independently computed results disagree where agreement is required.
struct InconsistencyError : Error {
    using Error::Error;
};

/// Malformed textual input (rational strings, JSON payloads).
struct ParseError : Error {
    using Error::Error;
};

} // namespace supermorph

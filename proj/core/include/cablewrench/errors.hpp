#pragma once

#include <stdexcept>
#include <string>

namespace cablewrench {

/// Base class for everything this library throws on purpose. Catch this at the
/// CLI boundary; std::logic_error / std::bad_alloc escaping past it is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input data failed a structural or range check (wrong counts, indices out of
/// range, inverted bounds, ...). The message names the offending field or value.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A required field is absent from a configuration document.
class MissingFieldError : public ValidationError {
public:
    explicit MissingFieldError(const std::string& field)
        : ValidationError("missing required field: " + field) {}
};

/// Configuration text is not well-formed (JSON syntax and the like).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: a computation could not be completed to tolerance
/// (singular matrix, solver iteration cap, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A cable has (numerically) zero length, so its direction is undefined.
class DegenerateCableError : public NumericalError {
public:
    explicit DegenerateCableError(int cable_index)
        : NumericalError("cable " + std::to_string(cable_index + 1) +
                         " degenerate: exit and anchor coincide"),
          cable(cable_index) {}
    int cable; ///< 0-based
};

/// The wrist contact matrix is rank-deficient; angular rates cannot be mapped.
class SingularWristError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Cable pairing in an arrangement is inconsistent (a loop pair does not land
/// on a designated anchor pair, duplicate assignments, ...).
class InvalidPairingError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A tension box with min > max in some component.
class EmptyBoxError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A combinatorial count does not fit in 64 bits.
class CountOverflowError : public Error {
public:
    using Error::Error;
};

/// A trajectory or profile was asked for with duration <= 0.
class NonPositiveDurationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace cablewrench

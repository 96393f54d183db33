// errors.hpp — exception types thrown across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension k outside the operation's admissible range.
struct InvalidDimensionError : Error {
    using Error::Error;
};

/// A scalar parameter violates its precondition (nonpositive shape, ...).
struct InvalidParameterError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

/// A law misses an assumption the operation relies on (E{1/R} = inf,
/// missing scaling function, upper endpoint != 1, ...).
struct UnsupportedLawError : Error {
    using Error::Error;
};

struct NotPositiveDefiniteError : Error {
    using Error::Error;
};

/// A covariance schedule evaluated at too small an n; carries the offending
/// smallest eigenvalue.
struct ScheduleTooEarlyError : Error {
    ScheduleTooEarlyError(const std::string& what, double smallest_eig)
        : Error(what), smallest_eigenvalue(smallest_eig) {}
    double smallest_eigenvalue;
};

struct InvalidVariogramError : Error {
    using Error::Error;
};

/// Root/quantile solver could not find a solution (flat CDF, atom, gap).
struct NoSolutionError : Error {
    using Error::Error;
};

/// Problem size beyond a hard implementation limit (e.g. 2^k enumeration).
struct TooLargeError : Error {
    using Error::Error;
};

enum class ConfigErrorCode {
    UnknownKind,
    MissingField,
    BadType,
    InvariantViolation,
};

/// Configuration parse/validation failure with the offending field path.
struct ConfigError : Error {
    ConfigError(ConfigErrorCode c, const std::string& path, const std::string& what)
        : Error(path + ": " + what), code(c), field_path(path) {}
    ConfigErrorCode code;
    std::string field_path;
};

}  // namespace extremal

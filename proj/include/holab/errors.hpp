#pragma once

#include <stdexcept>
#include <string>

namespace holab {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation requested outside a function's declared or natural domain.
struct DomainError : Error {
    using Error::Error;
};

/// A computation produced inf/NaN where a finite value is required.
struct NonFiniteError : Error {
    using Error::Error;
};

/// Expression string could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

/// Adaptive quadrature ran out of panel budget before meeting tolerance.
struct QuadratureError : Error {
    using Error::Error;
};

/// An object failed its construction-time invariants.
struct ConstructionError : Error {
    using Error::Error;
};

/// Monte Carlo run censored more paths than allowed.
struct CensoringError : Error {
    using Error::Error;
};

/// Scenario file or CLI arguments are invalid.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace holab

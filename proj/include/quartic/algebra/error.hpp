#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Exact polynomial division left a remainder.
struct NotDivisible : Error {
    using Error::Error;
};

/// A parameter value where the configuration or the surface degenerates.
struct DegenerateParameter : Error {
    using Error::Error;
};

/// Points that were required to be in general position are not.
struct GeneralPositionError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace quartic

#pragma once

#include <stdexcept>
#include <string>

namespace fockasym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-conforming matrix or vector shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Size guard exceeded (enumeration caps, missing coefficients).
class BoundError : public Error {
public:
    using Error::Error;
};

/// A determinant ratio or normalizer vanished.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Malformed caller input (weights, intervals, dimensions).
class InputError : public Error {
public:
    using Error::Error;
};

/// Boundary parameters violating their invariants.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A sequence builder could not realize the requested shape at this N.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Text that is not a valid exact literal or config entry.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace fockasym

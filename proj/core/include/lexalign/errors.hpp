#pragma once

#include <stdexcept>

namespace lexalign {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix dimensions incompatible with the requested operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A structural invariant of a domain type would be violated.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or stream.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A requested key (word, vertex) is not present.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Numerical failure escalated by strict mode (e.g. transport solver divergence).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace lexalign

#pragma once

#include <stdexcept>
#include <string>

namespace acs {

/// Base of every error raised by the library. The CLI maps subclasses to
/// distinct messages and exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands were built over different RingSpec / KSpec instances.
class SpecMismatch : public Error {
public:
    using Error::Error;
};

/// Generator index, degree, or basis parameter outside its valid range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Inversion requested for an element whose constant term is not a unit.
class NotAUnit : public Error {
public:
    using Error::Error;
};

/// A coefficient vector does not match the family shape for the parity of n.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A rational result that should have been integral was not.
class NonIntegral : public Error {
public:
    using Error::Error;
};

/// A search box exceeds the configured candidate ceiling.
class CeilingExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed input (bad JSON, bad parameters).
class InvalidInput : public Error {
public:
    using Error::Error;
};

} // namespace acs

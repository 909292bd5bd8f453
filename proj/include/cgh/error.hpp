#pragma once

#include <stdexcept>
#include <string>

namespace cgh {

// Error taxonomy. The CLI maps each class to its own exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: unparsable strings, non-monic curves, off-curve points.
class InputError : public Error {
public:
    using Error::Error;
};

// Mathematically invalid request: degree mismatch, shared support,
// non-ordinary data, singular cup matrix.
class DomainError : public Error {
public:
    using Error::Error;
};

// The result is not determined at the available precision.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// A backend was asked for something outside its declared capabilities,
// or an oracle table has no entry for the requested integral.
class CapabilityError : public Error {
public:
    using Error::Error;
};

} // namespace cgh

#pragma once

#include <stdexcept>
#include <string>

namespace wks {

// Bad user-supplied values: parameters outside their domain, malformed
// files, missing samples.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A bound was requested outside its admissibility region. The message
// names the violated inequality.
class GateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numeric machinery failed: non-bracketed supremum, quadrature that does
// not converge, and similar.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An entropy integral whose refinement does not stabilise.
class DivergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

// No truncation order up to the configured cap satisfies the certificate.
class UnsatisfiableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wks

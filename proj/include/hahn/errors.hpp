#pragma once

#include <stdexcept>
#include <string>

namespace hahn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched variable counts in polynomial ring operations.
struct DimensionError : Error {
    using Error::Error;
};

/// An index or degree outside the range an operation is defined for.
struct OutOfRangeError : Error {
    using Error::Error;
};

/// The operation's hypotheses do not hold for the given parameters.
struct NotApplicableError : Error {
    using Error::Error;
};

/// A denominator Pochhammer vanished where the formula requires a value.
struct PoleError : Error {
    using Error::Error;
};

/// A grid function was asked for a value outside its domain with a
/// nonzero stencil coefficient.
struct GridDomainError : Error {
    using Error::Error;
};

/// Unsupported degree for the desk-scale factorization routines.
struct UnsupportedDegreeError : Error {
    using Error::Error;
};

/// Coefficient requested outside the defined (j,k) table.
struct TableError : Error {
    using Error::Error;
};

}  // namespace hahn

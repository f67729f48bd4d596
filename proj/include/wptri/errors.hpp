// errors.hpp - exception types shared by all wptri modules
#ifndef WPTRI_ERRORS_HPP
#define WPTRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wptri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A gcd precondition failed (non-coprime pair, total gcd > 1, weights not
/// pairwise coprime).
struct NotCoprimeError : Error {
    using Error::Error;
};

/// Arguments do not describe a valid object (bad cyclic-quotient type,
/// q outside [1,d), weight < 1, negative degree where forbidden).
struct InvalidTypeError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// An oracle guard tripped; the request is too big for the slow path.
struct TooLargeError : Error {
    using Error::Error;
};

/// Floating-point sanity check failed (e.g. residual imaginary part).
struct NumericError : Error {
    using Error::Error;
};

/// An internal invariant broke; always a bug, never a caller error.
struct InternalError : Error {
    using Error::Error;
};

} // namespace wptri

#endif

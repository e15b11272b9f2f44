#pragma once

#include <stdexcept>
#include <string>

namespace cshift {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root finder hit its iteration cap with a residual above tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

/// An operation requiring a Hermitian input received a matrix with
/// ||A - A*|| above the acceptance band.
struct NotHermitian : Error {
    using Error::Error;
};

/// Evaluation point collided with a pole of a Blaschke factor.
struct PoleHit : Error {
    using Error::Error;
};

/// The operation is only defined for a specific degree.
struct WrongDegree : Error {
    using Error::Error;
};

/// The operation requires all zeros of the Blaschke product to be real.
struct NotRealZeros : Error {
    using Error::Error;
};

/// Interpolation nodes closer than the separation floor.
struct NodesTooClose : Error {
    using Error::Error;
};

/// Bisection endpoints failed to straddle the target.
struct BracketFailure : Error {
    using Error::Error;
};

/// Successive extrapolants disagreed beyond the stability tolerance.
struct ExtrapolationUnstable : Error {
    using Error::Error;
};

/// A scan that must bracket a root found none.
struct NoRootFound : Error {
    using Error::Error;
};

/// Malformed textual input (zero lists, complex literals, config files).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace cshift

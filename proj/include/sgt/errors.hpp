#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

/// Base class for every error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed `.sg` text (bad header, bad token, out-of-range vertex).
struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// A structural invariant of SignedGraph was violated (loop, duplicate edge, bad sign).
struct InvariantViolation : Error {
    using Error::Error;
};

/// An operation was asked to run above its configured order limit.
struct LimitExceeded : Error {
    using Error::Error;
};

/// The vertex partition is not equitable for the given matrix.
struct NotEquitable : Error {
    using Error::Error;
};

/// Root bracketing failed: no sign change and no certificate that the
/// largest root lies inside the bracket.
struct BracketError : Error {
    using Error::Error;
};

/// The eigensolver did not reach its convergence threshold within the sweep cap.
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// A quotient/residual reconstruction disagreed with the direct spectrum.
/// Signals a bug in the caller's partition or shifts, not a math failure.
struct MultisetMismatch : Error {
    using Error::Error;
};

/// A documented precondition does not hold for the given input.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// Cycle enumeration exceeded its work cap.
struct WorkCapExceeded : Error {
    using Error::Error;
};

/// Family parameters outside the valid range (e.g. GammaNT with t < 2).
struct InvalidFamily : Error {
    using Error::Error;
};

/// Operation requires a connected graph.
struct Disconnected : Error {
    using Error::Error;
};

/// Search configuration is inconsistent (mode/order mismatch, bad flags).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace sgt

#pragma once

#include <stdexcept>
#include <string>

namespace zariski {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: dimension mismatch, asymmetric matrix where a
/// symmetric one is required, negative coefficients where effectivity is
/// required, out-of-range indices, unknown names.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The supplied cone data violate the existence hypotheses of the
/// decomposition (singular support Gram, a negative solution coefficient,
/// indefinite support matrix, or a positive part that cannot be made nef).
/// Signals bad input data rather than an engine bug.
class NotPseudoEffectiveError : public Error {
 public:
  using Error::Error;
};

/// Subset enumeration found zero or more than one valid decomposition where
/// exactly one must exist.
class OracleViolationError : public Error {
 public:
  using Error::Error;
};

/// The generator Gram matrix is singular where an invertible cone matrix is
/// required.
class DegenerateConeError : public Error {
 public:
  using Error::Error;
};

/// A configured cap was exceeded (matrix size, factorization bound,
/// enumeration size).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Structured-input parse failure; the message carries the source name and
/// enough context to locate the offending entry.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zariski

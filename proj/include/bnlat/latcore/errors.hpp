#pragma once

#include <stdexcept>
#include <string>

namespace bnlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: wrong shapes, asymmetric Gram matrices,
/// parameters outside the documented domain.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A metric operation was asked to work on a degenerate Gram matrix.
class DegenerateLatticeError : public InputError {
 public:
  using InputError::InputError;
};

/// A definite lattice was required but the Gram matrix is indefinite.
class NotDefiniteError : public InputError {
 public:
  using InputError::InputError;
};

/// Rank or group order outside the supported range.
class BoundExceededError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace bnlat

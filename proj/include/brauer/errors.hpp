#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shape is unusable (empty, non-square where square is required, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but fails a structural check (group law, cocycle
/// identity, eigenvalue condition).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Computation would exceed a documented size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace brauer

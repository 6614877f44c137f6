#pragma once

#include <stdexcept>
#include <string>

namespace sawstrip {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: L < M, unknown lattice, width below the minimum.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Width or memory above the configured feasibility bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an evaluation (z >= 1, z beyond a pole, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Malformed input file or report.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace sawstrip

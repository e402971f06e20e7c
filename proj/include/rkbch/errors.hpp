#pragma once

#include <stdexcept>
#include <string>

namespace rkbch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// cosh(λ) fell below −1: no real λ² on the principal branches.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// sinh(λ)/λ vanished (λ = iπ), so the coefficient maps are singular.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters, or no real solution in the requested direction.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix does not satisfy the structural precondition of an operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Scaling and squaring needed more squarings than allowed.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Fock truncation dimension out of range.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Truncated Fock trace did not settle under dimension doubling.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rkbch

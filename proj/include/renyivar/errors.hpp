#pragma once

#include <stdexcept>
#include <string>

namespace renyivar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on alphabets (or state spaces) of different sizes.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t lhs, std::size_t rhs)
      : Error(what + ": dimension mismatch (" + std::to_string(lhs) + " vs " +
              std::to_string(rhs) + ")") {}
};

/// A constructor or operation received a value outside its domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Extended-real arithmetic hit an undefined form such as +inf + (-inf).
class IndeterminateForm : public Error {
 public:
  using Error::Error;
};

/// A candidate point lies outside the feasible set of the requested problem.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// An iterative eigen-solver did not meet its stopping rule.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace renyivar

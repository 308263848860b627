#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homequiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, scalar or matrix text. Carries the 0-based offset
/// into the input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input parsed fine but mixes monomials of two different total degrees.
class NonHomogeneousError : public ParseError {
 public:
  NonHomogeneousError(std::size_t first, std::size_t second)
      : ParseError(0, "non-homogeneous polynomial (degrees " + std::to_string(first) + " and " +
                          std::to_string(second) + ")"),
        first_(first),
        second_(second) {}

  std::size_t first_degree() const noexcept { return first_; }
  std::size_t second_degree() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Exact division by zero (in the scalar field or the polynomial ring).
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Shape, arity, index or degree precondition violated.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A linear map was required to be invertible but is singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Jacobian ideals of the two inputs differ, so the pencil argument does not apply.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A supplied degree-one substitution does not carry one Jacobian ideal onto the other.
class IsoVerificationError : public Error {
 public:
  using Error::Error;
};

/// Numeric integration failed to reach its target.
class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// A structural invariant that the mathematics guarantees did not hold.
/// Always indicates a defect in this library.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error("internal invariant violated: " + what) {}
};

}  // namespace homequiv

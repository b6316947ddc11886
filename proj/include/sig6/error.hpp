#pragma once

#include <stdexcept>
#include <string>

namespace sig6 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Hypergeometric parameters with c a non-positive integer.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Series hit its term budget before reaching the requested tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Quadrature refinement budget exhausted.
class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

/// Integrand produced NaN or infinity away from the endpoints.
class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

/// Iterative inversion ran out of iterations.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace sig6

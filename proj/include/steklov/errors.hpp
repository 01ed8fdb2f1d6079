#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Malformed or out-of-range input (bad radius, inconsistent curvature data).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation point outside the existence interval of a kernel or ODE solution.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A comparison hypothesis (e.g. alpha <= kappa) does not hold for the data.
class InapplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Iterative procedure exceeded its budget without meeting tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The numerical eigenvalue oracle failed (integration blow-up, validation failure).
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steklov

#pragma once

#include <stdexcept>
#include <string>

namespace polarvi {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input matrix is not invertible to working tolerance.
class SingularInput : public Error {
 public:
  using Error::Error;
};

/// Input matrix has negative determinant (outside GL+).
class NegativeDeterminant : public Error {
 public:
  using Error::Error;
};

/// An iteration hit its cap before meeting its tolerance.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, int iterations, double residual)
      : Error(what), iterations(iterations), residual(residual) {}
  int iterations;
  double residual;
};

/// A Lyapunov eigenvalue pair sits too close to zero for a stable solve.
class NearSingular : public Error {
 public:
  using Error::Error;
};

/// Coefficient matrix too far from identity for the rotation Sylvester solve.
class IllConditioned : public Error {
 public:
  using Error::Error;
};

/// A quadrature weight b_i is zero where a division by b_i is required.
class ZeroWeight : public Error {
 public:
  using Error::Error;
};

/// Configuration point too close to a charge pole of the dipole potential.
class PoleSingularity : public Error {
 public:
  using Error::Error;
};

/// A value failed the invariant required by its strong type.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Bad scenario/CLI input (unknown name, invalid grid, unreadable file).
class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace polarvi

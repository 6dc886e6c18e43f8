#pragma once

#include <stdexcept>
#include <string>

namespace rotform {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Flag construction from (numerically) linearly dependent vectors.
class DegenerateFlag : public Error {
 public:
  using Error::Error;
};

/// A form too ill-conditioned for the requested operation, or a numerical
/// breakdown (Gram-Schmidt pivot loss, eigensolver non-convergence) that
/// prevents certifying a result at the requested tolerance.
class IllConditionedForm : public Error {
 public:
  using Error::Error;
};

/// solve_collinear: the target is not a scalar multiple of the direction.
class NotCollinear : public Error {
 public:
  using Error::Error;
};

/// A nonzero vector was required.
class ZeroVector : public Error {
 public:
  using Error::Error;
};

/// A positive scale factor was required (ray directions must match).
class NonPositiveScale : public Error {
 public:
  using Error::Error;
};

/// Matrix input failed the symmetry check.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// Recovered scalar product came out asymmetric beyond tolerance.
class AsymmetricResult : public Error {
 public:
  using Error::Error;
};

/// Matrix input (or recovered form) is not positive definite.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// A transport oracle returned an element violating the rotation-group
/// axioms (failed involution, moved fixed ray, non-collinear image, ...).
class OracleContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rotform

#pragma once

#include <random>
#include <string>
#include <string_view>

#include "rotform/geometry.hpp"

namespace rotform {

/// Black-box flag-transport interface: the one operation a rotation group is
/// axiomatized by. For any two flags it returns the unique group element
/// carrying the first to the second. Implementations are stateless and safe
/// to share across threads.
class TransportOracle {
 public:
  virtual ~TransportOracle() = default;

  virtual Rotation transport(const Flag& from, const Flag& to) const = 0;

  /// Opaque identity tag for diagnostics.
  virtual std::string_view tag() const = 0;
};

/// Ratio of the extreme eigenvalues of the form matrix.
double condition_number(const SymmetricForm& b);

/// The unique element of SO(V;b) mapping one flag to the other, built as
/// F2 * F1^-1 from the adapted frames of the two flags. The result is
/// certified: pullback residual |d^T M d - M|_F <= tol * |M|_F and
/// |det d - 1| <= kDetTol, else IllConditionedForm. Forms with condition
/// number above kMaxFormCondition are refused.
Rotation transport(const SymmetricForm& b, const Flag& from, const Flag& to,
                   double tol = kDefaultTol);

/// True iff d preserves b within tol (relative Frobenius pullback residual)
/// and det d = 1 within tol. Never throws; non-finite input classifies false.
bool so_membership(const SymmetricForm& b, const Rotation& d, double tol = kDefaultTol);

/// Haar-distributed element of SO(V;b): a unit quaternion built from four
/// standard normal deviates gives a uniform coordinate rotation Q, conjugated
/// into the group by the symmetric square root of the form matrix,
/// d = M^-1/2 Q M^1/2.
Rotation haar_sample(const SymmetricForm& b, std::mt19937_64& rng);

/// Monte-Carlo average (1/n) sum d_i^T d_i over Haar samples, symmetrized:
/// an estimator of the form matrix up to positive scale, used as a
/// cross-check oracle.
SymmetricForm averaged_form(const SymmetricForm& b, int n_samples, std::mt19937_64& rng);

/// Transport closed over a fixed form. Reconstruction consumes only the
/// TransportOracle interface, so the form stays hidden from it.
class FormOracle final : public TransportOracle {
 public:
  explicit FormOracle(const SymmetricForm& b, double tol = kDefaultTol);

  Rotation transport(const Flag& from, const Flag& to) const override;
  std::string_view tag() const override { return tag_; }

 private:
  SymmetricForm b_;
  double tol_;
  std::string tag_;
};

FormOracle make_oracle(const SymmetricForm& b, double tol = kDefaultTol);

/// Seeded random SPD form: M = A^T A + eps I with standard normal A and
/// eps = 1e-3 tr(A^T A) / 3, redrawn until the condition number is at most
/// max_condition.
SymmetricForm random_spd_form(std::mt19937_64& rng, double max_condition = 1e3);

}  // namespace rotform

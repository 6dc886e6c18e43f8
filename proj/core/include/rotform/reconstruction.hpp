#pragma once

#include <optional>

#include "rotform/rotation_group.hpp"

namespace rotform {

/// Certificate that w is perpendicular to v: a group element fixing v and
/// negating w, necessarily an involution.
struct PerpendicularityWitness {
  Rotation r;
  Vec3 fixed_vector;
  Vec3 negated_vector;
};

/// The coordinate axis least aligned with n (smallest |cos| of the
/// coordinate angle, ties broken by lowest index). Deterministic auxiliary
/// choice for flag construction.
Vec3 best_axis_auxiliary(const Vec3& n);

/// The involution carrying [v, w] to [v, -w]: it fixes v and acts as -1 on
/// the perpendicular complement component of w. Contract checks (r^2 = id,
/// r v = v within tol) throw OracleContractViolation when the oracle is
/// broken.
Rotation flip_involution(const TransportOracle& o, const Vec3& v, const Vec3& w,
                         double tol = kDefaultTol);

/// Witness for "w is perpendicular to v" (a rotation fixing v and negating
/// w), or nullopt when the vectors are not perpendicular. Zero cases are
/// answered without consulting the oracle for a flag: only the zero vector
/// is perpendicular to itself, and 0 is perpendicular to everything.
std::optional<PerpendicularityWitness> perpendicularity_witness(const TransportOracle& o,
                                                                const Vec3& w, const Vec3& v,
                                                                double tol = kDefaultTol);

/// Perpendicularity predicate: w is perpendicular to v. Symmetric in its
/// arguments (a property verified by the test suites, not assumed here).
bool is_perp(const TransportOracle& o, const Vec3& w, const Vec3& v, double tol = kDefaultTol);

/// A nonzero vector perpendicular to n, extracted as u = w - r w from the
/// flip involution of the auxiliary w. Throws ZeroVector for n = 0.
Vec3 perp_vector(const TransportOracle& o, const Vec3& n, double tol = kDefaultTol);

/// perp_vector with an explicit auxiliary flag opener (used by the orbit
/// checks and to obtain a second independent perpendicular).
Vec3 perp_vector_with_aux(const TransportOracle& o, const Vec3& n, const Vec3& aux,
                          double tol = kDefaultTol);

/// The unique rotation fixing n and negating every vector perpendicular to
/// n. The defining properties are asserted on the oracle's answer, with a
/// second perpendicular obtained from an independent auxiliary.
Rotation half_turn(const TransportOracle& o, const Vec3& n, double tol = kDefaultTol);

/// The linear form alpha_v with r_v w + w = alpha_v(w) v. Evaluation takes
/// value 2 at v and 0 on vectors perpendicular to v. The half-turn r_v is
/// computed once at construction and reused; evaluation order does not
/// change any result.
class AlphaForm {
 public:
  AlphaForm(const TransportOracle& o, const Vec3& base, double tol = kDefaultTol);

  double operator()(const Vec3& w) const;

  const Vec3& base() const { return base_; }
  const Rotation& base_half_turn() const { return half_turn_; }

 private:
  Vec3 base_;
  double tol_;
  Rotation half_turn_;
};

double alpha(const TransportOracle& o, const Vec3& v, const Vec3& w, double tol = kDefaultTol);

/// Norm induced by the length unit: transport the unit representative onto
/// the ray of v and read off the scale. Returns 0 for v = 0; throws
/// NonPositiveScale or NotCollinear on a broken oracle.
double norm(const TransportOracle& o, const LengthUnit& unit, const Vec3& v,
            double tol = kDefaultTol);

/// norm with explicit auxiliary flag openers on both sides (the orbit/ray
/// checks vary these to confirm the value is independent of the choice).
double norm_with_aux(const TransportOracle& o, const LengthUnit& unit, const Vec3& v,
                     const Vec3& aux_unit, const Vec3& aux_v, double tol = kDefaultTol);

/// The recovered scalar product b(v, w) = |v|^2 alpha_v(w) / 2, with
/// b(0, w) = 0.
double scalar_product(const TransportOracle& o, const LengthUnit& unit, const Vec3& v,
                      const Vec3& w, double tol = kDefaultTol);

/// Evaluates the recovered scalar product on the standard basis, checks
/// symmetry within tol, symmetrizes, and rescales so the unit representative
/// has squared length exactly 1. Throws AsymmetricResult or
/// NotPositiveDefinite when the oracle is not a rotation group's transport.
SymmetricForm recover_form(const TransportOracle& o, const LengthUnit& unit,
                           double tol = kDefaultTol);

}  // namespace rotform

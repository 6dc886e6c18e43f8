#include "rotform/reconstruction.hpp"

#include <sstream>

namespace rotform {

namespace {

double matrix_residual(const Mat3& actual, const Mat3& expected) {
  return (actual - expected).frobenius() / std::max(1.0, expected.frobenius());
}

double vector_residual(const Vec3& actual, const Vec3& expected) {
  return (actual - expected).norm() / std::max(expected.norm(), 1e-30);
}

void require_contract(bool ok, const char* what) {
  if (!ok) {
    throw OracleContractViolation(std::string("transport oracle broke its contract: ") + what);
  }
}

bool effectively_zero(const Vec3& v) { return !(v.norm() > kZeroThreshold); }

}  // namespace

Vec3 best_axis_auxiliary(const Vec3& n) {
  int best = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(n[k]) < std::abs(n[best])) best = k;
  }
  return axis(best);
}

Rotation flip_involution(const TransportOracle& o, const Vec3& v, const Vec3& w, double tol) {
  const Flag from(v, w);
  const Flag to(v, -w);
  const Rotation r = o.transport(from, to);
  require_contract(matrix_residual((r * r).m, Mat3::identity()) <= tol,
                   "flip involution squared is not the identity");
  require_contract(vector_residual(r * v, v) <= tol, "flip involution moved its fixed ray");
  return r;
}

std::optional<PerpendicularityWitness> perpendicularity_witness(const TransportOracle& o,
                                                                const Vec3& w, const Vec3& v,
                                                                double tol) {
  if (effectively_zero(w)) {
    // The identity fixes v and negates the zero vector.
    return PerpendicularityWitness{Rotation::identity(), v, w};
  }
  if (effectively_zero(v)) {
    // Any element negating w fixes the zero vector; take the ray flip of w.
    const Vec3 aux = best_axis_auxiliary(w);
    const Rotation r = o.transport(Flag(w, aux), Flag(-w, aux));
    require_contract(matrix_residual((r * r).m, Mat3::identity()) <= tol,
                     "ray flip squared is not the identity");
    require_contract(vector_residual(r * w, -w) <= tol, "ray flip did not negate the ray");
    return PerpendicularityWitness{r, v, w};
  }
  if (independence_measure(v, w) < kFlagMinIndependence) {
    // Nonzero dependent vectors: only the zero vector is perpendicular to
    // itself.
    return std::nullopt;
  }
  const Rotation r = flip_involution(o, v, w, tol);
  if (vector_residual(r * w, -w) <= tol) {
    return PerpendicularityWitness{r, v, w};
  }
  return std::nullopt;
}

bool is_perp(const TransportOracle& o, const Vec3& w, const Vec3& v, double tol) {
  return perpendicularity_witness(o, w, v, tol).has_value();
}

Vec3 perp_vector_with_aux(const TransportOracle& o, const Vec3& n, const Vec3& aux, double tol) {
  const Rotation r = flip_involution(o, n, aux, tol);
  const Vec3 u = aux - r * aux;
  require_contract(u.norm() > kZeroThreshold, "flip involution left no perpendicular component");
  return u;
}

Vec3 perp_vector(const TransportOracle& o, const Vec3& n, double tol) {
  if (!is_finite(n) || effectively_zero(n)) {
    throw ZeroVector("perp_vector: n must be a nonzero vector");
  }
  return perp_vector_with_aux(o, n, best_axis_auxiliary(n), tol);
}

Rotation half_turn(const TransportOracle& o, const Vec3& n, double tol) {
  if (!is_finite(n) || effectively_zero(n)) {
    throw ZeroVector("half_turn: n must be a nonzero vector");
  }
  const Vec3 u = perp_vector(o, n, tol);
  const Rotation rn = o.transport(Flag(n, u), Flag(n, -u));
  require_contract(vector_residual(rn * n, n) <= tol, "half-turn moved its axis");
  require_contract(matrix_residual((rn * rn).m, Mat3::identity()) <= tol,
                   "half-turn squared is not the identity");

  // Cross-check against a perpendicular from a different auxiliary.
  const Vec3 first_aux = best_axis_auxiliary(n);
  for (int k = 0; k < 3; ++k) {
    const Vec3 a = axis(k);
    if (dot(a, first_aux) > 0.5) continue;  // skip the auxiliary already used
    if (independence_measure(n, a) < 1e-6) continue;
    const Vec3 u2 = perp_vector_with_aux(o, n, a, tol);
    if (independence_measure(u, u2) < 1e-6) continue;
    require_contract(vector_residual(rn * u2, -u2) <= tol,
                     "half-turn failed to negate an independent perpendicular");
    return rn;
  }
  throw IllConditionedForm(
      "half_turn: no coordinate axis yields an independent second perpendicular");
}

AlphaForm::AlphaForm(const TransportOracle& o, const Vec3& base, double tol)
    : base_(base), tol_(tol), half_turn_(half_turn(o, base, tol)) {}

double AlphaForm::operator()(const Vec3& w) const {
  // r_v w + w = alpha_v(w) v; the collinearity check is part of the contract.
  return solve_collinear(half_turn_ * w + w, base_, tol_);
}

double alpha(const TransportOracle& o, const Vec3& v, const Vec3& w, double tol) {
  return AlphaForm(o, v, tol)(w);
}

double norm_with_aux(const TransportOracle& o, const LengthUnit& unit, const Vec3& v,
                     const Vec3& aux_unit, const Vec3& aux_v, double tol) {
  const Vec3& n0 = unit.vector();
  const Rotation d = o.transport(Flag(n0, aux_unit), Flag(v, aux_v));
  const double mu = solve_collinear(d * n0, v, tol);
  if (!(mu > 0.0)) {
    std::ostringstream os;
    os << "norm: transported unit lies on the opposite ray (scale " << mu << ")";
    throw NonPositiveScale(os.str());
  }
  return 1.0 / mu;
}

double norm(const TransportOracle& o, const LengthUnit& unit, const Vec3& v, double tol) {
  if (!is_finite(v)) {
    throw Error("norm: vector must be finite");
  }
  if (effectively_zero(v)) return 0.0;
  return norm_with_aux(o, unit, v, best_axis_auxiliary(unit.vector()), best_axis_auxiliary(v),
                       tol);
}

double scalar_product(const TransportOracle& o, const LengthUnit& unit, const Vec3& v,
                      const Vec3& w, double tol) {
  if (!is_finite(v) || !is_finite(w)) {
    throw Error("scalar_product: vectors must be finite");
  }
  if (effectively_zero(v)) return 0.0;
  const double nv = norm(o, unit, v, tol);
  return nv * nv * alpha(o, v, w, tol) / 2.0;
}

SymmetricForm recover_form(const TransportOracle& o, const LengthUnit& unit, double tol) {
  Mat3 b;
  for (int i = 0; i < 3; ++i) {
    const Vec3 ei = axis(i);
    const AlphaForm alpha_i(o, ei, tol);
    const double ni = norm(o, unit, ei, tol);
    for (int j = 0; j < 3; ++j) {
      b(i, j) = ni * ni * alpha_i(axis(j)) / 2.0;
    }
  }

  const double scale = std::max(b.max_abs(), kZeroThreshold);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double gap = std::abs(b(i, j) - b(j, i));
      if (!(gap <= tol * scale)) {
        std::ostringstream os;
        os << "recovered form is asymmetric: |b(" << i << "," << j << ") - b(" << j << "," << i
           << ")| = " << gap;
        throw AsymmetricResult(os.str());
      }
    }
  }
  Mat3 sym = symmetrized(b);

  // Normalize so the unit representative has squared length exactly 1.
  const Vec3& n0 = unit.vector();
  const double unit_sq = dot(n0, sym * n0);
  if (!(unit_sq > 0.0)) {
    throw NotPositiveDefinite("recovered form gives the unit non-positive squared length");
  }
  sym = sym / unit_sq;

  try {
    return SymmetricForm(sym);
  } catch (const NotPositiveDefinite&) {
    throw NotPositiveDefinite("recovered form is not positive definite");
  }
}

}  // namespace rotform

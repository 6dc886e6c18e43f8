#include "rotform/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace rotform {

namespace {

std::string describe(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
  return os.str();
}

}  // namespace

Mat3 Mat3::inverse() const {
  const double d = det();
  if (!(std::abs(d) > 0.0) || !std::isfinite(d)) {
    throw IllConditionedForm("matrix inverse: determinant is zero or not finite");
  }
  Mat3 adj;
  adj.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  adj.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  adj.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  adj.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  adj.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  adj.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  adj.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  adj.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  adj.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return adj / d;
}

SymmetricForm::SymmetricForm(const Mat3& m) : m_(m) {
  if (!is_finite(m)) {
    throw NotSymmetric("form matrix has non-finite entries");
  }
  const double scale = std::max(m.max_abs(), kZeroThreshold);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double gap = std::abs(m(i, j) - m(j, i));
      if (!(gap <= kSymmetryTol * scale)) {
        std::ostringstream os;
        os << "form matrix is not symmetric: |m(" << i << "," << j << ") - m(" << j << "," << i
           << ")| = " << gap;
        throw NotSymmetric(os.str());
      }
    }
  }
  // Sylvester: all three leading principal minors positive.
  const double m1 = m(0, 0);
  const double m2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double m3 = m.det();
  if (!(m1 > 0.0) || !(m2 > 0.0) || !(m3 > 0.0)) {
    std::ostringstream os;
    os << "form matrix is not positive definite: leading principal minors " << m1 << ", " << m2
       << ", " << m3;
    throw NotPositiveDefinite(os.str());
  }
}

double independence_measure(const Vec3& v, const Vec3& w) {
  if (!is_finite(v) || !is_finite(w)) return 0.0;
  const double nv = v.squared_norm();
  const double nw = w.squared_norm();
  if (!(nv > 0.0) || !(nw > 0.0)) return 0.0;
  // |v x w|^2 = |v|^2 |w|^2 - <v,w>^2 (Lagrange), free of cancellation.
  return cross(v, w).squared_norm() / (nv * nw);
}

Flag::Flag(const Vec3& v, const Vec3& w) : v_(v), w_(w) {
  const double g = independence_measure(v, w);
  if (!(g >= kFlagMinIndependence)) {
    throw DegenerateFlag("flag vectors " + describe(v) + ", " + describe(w) +
                         " are numerically linearly dependent (independence measure " +
                         std::to_string(g) + ")");
  }
}

LengthUnit::LengthUnit(const Vec3& n0) : n0_(n0) {
  if (!is_finite(n0) || !(n0.norm() > kZeroThreshold)) {
    throw ZeroVector("length unit representative must be a nonzero vector");
  }
}

bool flag_equal(const Flag& f1, const Flag& f2, double tol) {
  // Work with unit-length columns; positive rescaling does not change a flag.
  const Vec3 v1 = f1.v() / f1.v().norm();
  const Vec3 w1 = f1.w() / f1.w().norm();
  const Vec3 v2 = f2.v() / f2.v().norm();
  const Vec3 w2 = f2.w() / f2.w().norm();

  // Same ray: v2 = lambda v1, lambda > 0.
  const double lambda = dot(v2, v1);
  if (!(lambda > 0.0)) return false;
  const double ray_res = (v2 - v1 * lambda).norm();
  if (!(ray_res <= tol * (2.0 + std::abs(lambda)))) return false;

  // Same half-plane: w2 = a v1 + c w1 with c > 0, solved by projecting onto
  // the in-plane normal of v1 (stable for thin flags).
  const Vec3 wperp = w1 - v1 * dot(w1, v1);
  const double wp2 = dot(wperp, wperp);
  if (!(wp2 > 0.0)) return false;
  const double c = dot(w2, wperp) / wp2;
  if (!(c > 0.0)) return false;
  const double a = dot(w2 - w1 * c, v1);
  const Vec3 combo = v1 * a + w1 * c;
  const double side_res = (w2 - combo).norm();
  return side_res <= tol * (2.0 + combo.norm());
}

Flag apply_flag(const Rotation& d, const Flag& f) { return Flag(d * f.v(), d * f.w()); }

AdaptedFrame adapted_frame(const SymmetricForm& b, const Flag& f) {
  const Vec3 v = f.v();
  const Vec3 w = f.w();

  const double bvv = b(v, v);
  if (!(bvv > kZeroThreshold)) {
    throw IllConditionedForm("adapted frame: b(v,v) vanishes on the ray direction");
  }
  const Vec3 e1 = v / std::sqrt(bvv);

  const Vec3 u2 = w - e1 * b(w, e1);
  const double pivot2 = b(u2, u2) / b(w, w);
  if (!(pivot2 >= kPivotThreshold)) {
    throw IllConditionedForm("adapted frame: Gram-Schmidt pivot " + std::to_string(pivot2) +
                             " below threshold");
  }
  const Vec3 e2 = u2 / std::sqrt(b(u2, u2));

  // Complete with the coordinate axis leaving the largest relative pivot.
  Vec3 best_u3;
  double best_pivot = -1.0;
  for (int k = 0; k < 3; ++k) {
    const Vec3 a = axis(k);
    const Vec3 u3 = a - e1 * b(a, e1) - e2 * b(a, e2);
    const double pivot = b(u3, u3) / b(a, a);
    if (pivot > best_pivot) {
      best_pivot = pivot;
      best_u3 = u3;
    }
  }
  if (!(best_pivot >= kPivotThreshold)) {
    throw IllConditionedForm("adapted frame: no coordinate axis completes the frame");
  }
  Vec3 e3 = best_u3 / std::sqrt(b(best_u3, best_u3));
  if (Mat3::from_cols(e1, e2, e3).det() < 0.0) e3 = -e3;

  return {e1, e2, e3};
}

double solve_collinear(const Vec3& target, const Vec3& direction, double tol) {
  const double dd = dot(direction, direction);
  if (!(dd > kZeroThreshold)) {
    throw ZeroVector("solve_collinear: direction must be nonzero");
  }
  const double alpha = dot(target, direction) / dd;
  const double residual = (target - direction * alpha).norm();
  const double scale = target.norm() + std::abs(alpha) * direction.norm() + direction.norm();
  if (!(residual <= tol * scale)) {
    std::ostringstream os;
    os << "solve_collinear: target " << describe(target) << " is not collinear with direction "
       << describe(direction) << " (residual " << residual << ")";
    throw NotCollinear(os.str());
  }
  return alpha;
}

}  // namespace rotform

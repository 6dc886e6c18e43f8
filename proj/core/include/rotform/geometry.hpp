#pragma once

#include <cmath>

#include "rotform/errors.hpp"

namespace rotform {

// Numeric policy shared across the library.
inline constexpr double kDefaultTol = 1e-9;            // relative residual checks
inline constexpr double kFlagMinIndependence = 1e-12;  // normalized Gram determinant floor
inline constexpr double kZeroThreshold = 1e-300;       // nonzero-vector gate at API boundaries
inline constexpr double kSymmetryTol = 1e-9;           // relative symmetry slack for form input
inline constexpr double kDetTol = 1e-9;                // |det - 1| slack for group elements
inline constexpr double kPivotThreshold = 1e-14;       // relative Gram-Schmidt pivot floor
inline constexpr double kMaxFormCondition = 1e6;       // condition guard for group operations

//----------------------------------------------------------------------------
// Vec3: element of the 3-dimensional real vector space V, fixed coordinates
//----------------------------------------------------------------------------

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double a) const { return {x * a, y * a, z * a}; }
  Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }
  friend Vec3 operator*(double a, const Vec3& v) { return v * a; }

  double squared_norm() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(squared_norm()); }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

inline Vec3 axis(int k) { return k == 0 ? Vec3{1, 0, 0} : (k == 1 ? Vec3{0, 1, 0} : Vec3{0, 0, 1}); }

//----------------------------------------------------------------------------
// Mat3: endomorphism of V, row-major
//----------------------------------------------------------------------------

struct Mat3 {
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  double operator()(int i, int j) const { return m[i][j]; }
  double& operator()(int i, int j) { return m[i][j]; }

  static Mat3 identity() { return from_diag(1, 1, 1); }

  static Mat3 from_diag(double a, double b, double c) {
    Mat3 r;
    r.m[0][0] = a;
    r.m[1][1] = b;
    r.m[2][2] = c;
    return r;
  }

  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Mat3 r;
    for (int j = 0; j < 3; ++j) {
      r.m[0][j] = r0[j];
      r.m[1][j] = r1[j];
      r.m[2][j] = r2[j];
    }
    return r;
  }

  static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      r.m[i][0] = c0[i];
      r.m[i][1] = c1[i];
      r.m[i][2] = c2[i];
    }
    return r;
  }

  Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
  Vec3 col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }

  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
  }

  Mat3 operator*(double a) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * a;
    return r;
  }
  friend Mat3 operator*(double a, const Mat3& o) { return o * a; }
  Mat3 operator/(double a) const { return (*this) * (1.0 / a); }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  double frobenius() const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
  }

  double max_abs() const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(m[i][j]));
    return s;
  }

  /// Adjugate-based inverse. Throws IllConditionedForm on a vanishing or
  /// non-finite determinant.
  Mat3 inverse() const;
};

inline Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a[i] * b[j];
  return r;
}

inline Mat3 symmetrized(const Mat3& a) { return (a + a.transposed()) * 0.5; }

inline bool is_finite(const Mat3& a) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!std::isfinite(a.m[i][j])) return false;
  return true;
}

//----------------------------------------------------------------------------
// Domain types
//----------------------------------------------------------------------------

/// Symmetric positive-definite bilinear form on V.
///
/// Construction validates symmetry (relative slack kSymmetryTol) and positive
/// definiteness (leading principal minors), throwing NotSymmetric or
/// NotPositiveDefinite.
class SymmetricForm {
 public:
  explicit SymmetricForm(const Mat3& m);

  const Mat3& mat() const { return m_; }

  /// Evaluates the form: b(v, w) = v^T M w.
  double operator()(const Vec3& v, const Vec3& w) const { return dot(v, m_ * w); }

 private:
  Mat3 m_;
};

/// Linear automorphism of V; a candidate rotation-group element.
///
/// Construction is unchecked: membership in a concrete group is decided by
/// so_membership, and group operations certify det = 1 within kDetTol on the
/// elements they produce.
struct Rotation {
  Mat3 m;

  static Rotation identity() { return {Mat3::identity()}; }

  Vec3 operator*(const Vec3& v) const { return m * v; }
  Rotation operator*(const Rotation& o) const { return {m * o.m}; }
  Rotation inverse() const { return {m.inverse()}; }
  double det() const { return m.det(); }
};

/// Normalized Gram determinant g = |v x w|^2 / (|v|^2 |w|^2), the
/// scale-invariant independence measure used to accept flags. Returns 0 for
/// zero or non-finite input.
double independence_measure(const Vec3& v, const Vec3& w);

/// Flag [v, w]: the pair (half-plane Rv + R>=0 w, ray R>=0 v) encoded by an
/// ordered pair of linearly independent vectors. Two pairs encode the same
/// flag iff they differ by positive rescaling of v and a shear plus positive
/// rescaling of w.
class Flag {
 public:
  /// Throws DegenerateFlag when the independence measure falls below
  /// kFlagMinIndependence or the input is not finite.
  Flag(const Vec3& v, const Vec3& w);

  const Vec3& v() const { return v_; }
  const Vec3& w() const { return w_; }

 private:
  Vec3 v_;
  Vec3 w_;
};

/// Group orbit used as the unit of length, represented by one element.
class LengthUnit {
 public:
  /// Throws ZeroVector when the representative is zero or not finite.
  explicit LengthUnit(const Vec3& n0);

  const Vec3& vector() const { return n0_; }

 private:
  Vec3 n0_;
};

//----------------------------------------------------------------------------
// Operations
//----------------------------------------------------------------------------

/// True iff f1 and f2 encode the same flag: f2.v = lambda f1.v with
/// lambda > 0, and f2.w = a f1.v + c f1.w with c > 0, both solved by
/// coordinates with relative residual at most tol.
bool flag_equal(const Flag& f1, const Flag& f2, double tol = kDefaultTol);

/// Image flag (d v, d w). Throws DegenerateFlag only when d is nearly
/// singular.
Flag apply_flag(const Rotation& d, const Flag& f);

/// b-orthonormal frame adapted to a flag: e1 spans the ray, e2 lies in the
/// half-plane on the w side, det(e1|e2|e3) > 0 in coordinates.
struct AdaptedFrame {
  Vec3 e1, e2, e3;

  Mat3 columns() const { return Mat3::from_cols(e1, e2, e3); }
};

/// Gram-Schmidt with respect to b, started from the flag pair and completed
/// with the coordinate axis of largest remaining pivot. Throws
/// IllConditionedForm when a pivot falls below kPivotThreshold (relative).
AdaptedFrame adapted_frame(const SymmetricForm& b, const Flag& f);

/// Least-squares solve of target = alpha * direction in coordinates,
/// alpha = <target, direction> / <direction, direction>. Throws NotCollinear
/// when the residual exceeds tol * (|target| + |alpha * direction| +
/// |direction|).
double solve_collinear(const Vec3& target, const Vec3& direction, double tol = kDefaultTol);

}  // namespace rotform

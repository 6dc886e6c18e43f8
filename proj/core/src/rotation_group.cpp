#include "rotform/rotation_group.hpp"

#include <limits>
#include <sstream>

#include "rotform/sym_eigen.hpp"

namespace rotform {

namespace {

void ensure_well_conditioned(const SymmetricForm& b) {
  const double cond = condition_number(b);
  if (!(cond <= kMaxFormCondition)) {
    std::ostringstream os;
    os << "form condition number " << cond << " exceeds " << kMaxFormCondition;
    throw IllConditionedForm(os.str());
  }
}

struct SqrtPair {
  Mat3 root;      // M^1/2
  Mat3 inv_root;  // M^-1/2
};

SqrtPair symmetric_sqrt(const SymmetricForm& b) {
  const SymmetricEigen eig = eigen_symmetric(b.mat());
  if (!(eig.values[0] > 0.0)) {
    throw NotPositiveDefinite("symmetric square root needs positive eigenvalues");
  }
  Mat3 root = Mat3{};
  Mat3 inv_root = Mat3{};
  for (int k = 0; k < 3; ++k) {
    const double s = std::sqrt(eig.values[k]);
    const Vec3 u = eig.vectors.col(k);
    root = root + outer(u, u) * s;
    inv_root = inv_root + outer(u, u) / s;
  }
  return {root, inv_root};
}

Mat3 quaternion_to_matrix(double w, double x, double y, double z) {
  Mat3 q;
  q(0, 0) = 1 - 2 * (y * y + z * z);
  q(0, 1) = 2 * (x * y - w * z);
  q(0, 2) = 2 * (x * z + w * y);
  q(1, 0) = 2 * (x * y + w * z);
  q(1, 1) = 1 - 2 * (x * x + z * z);
  q(1, 2) = 2 * (y * z - w * x);
  q(2, 0) = 2 * (x * z - w * y);
  q(2, 1) = 2 * (y * z + w * x);
  q(2, 2) = 1 - 2 * (x * x + y * y);
  return q;
}

}  // namespace

double condition_number(const SymmetricForm& b) {
  const SymmetricEigen eig = eigen_symmetric(b.mat());
  if (!(eig.values[0] > 0.0)) return std::numeric_limits<double>::infinity();
  return eig.values[2] / eig.values[0];
}

Rotation transport(const SymmetricForm& b, const Flag& from, const Flag& to, double tol) {
  ensure_well_conditioned(b);
  const Mat3 f1 = adapted_frame(b, from).columns();
  const Mat3 f2 = adapted_frame(b, to).columns();
  const Mat3 d = f2 * f1.inverse();

  const Mat3& m = b.mat();
  const double pullback = (d.transposed() * m * d - m).frobenius() / m.frobenius();
  if (!(pullback <= tol)) {
    std::ostringstream os;
    os << "transport: pullback residual " << pullback << " exceeds tolerance " << tol;
    throw IllConditionedForm(os.str());
  }
  const double det = d.det();
  if (!(std::abs(det - 1.0) <= kDetTol)) {
    std::ostringstream os;
    os << "transport: determinant " << det << " not 1 within " << kDetTol;
    throw IllConditionedForm(os.str());
  }
  return Rotation{d};
}

bool so_membership(const SymmetricForm& b, const Rotation& d, double tol) {
  if (!is_finite(d.m)) return false;
  const Mat3& m = b.mat();
  const double pullback = (d.m.transposed() * m * d.m - m).frobenius();
  if (!(pullback <= tol * m.frobenius())) return false;
  const double det = d.det();
  return std::abs(det - 1.0) <= tol;
}

Rotation haar_sample(const SymmetricForm& b, std::mt19937_64& rng) {
  ensure_well_conditioned(b);
  const SqrtPair s = symmetric_sqrt(b);
  std::normal_distribution<double> normal(0.0, 1.0);
  double w, x, y, z, n2;
  do {
    w = normal(rng);
    x = normal(rng);
    y = normal(rng);
    z = normal(rng);
    n2 = w * w + x * x + y * y + z * z;
  } while (!(n2 > 1e-12));
  const double inv = 1.0 / std::sqrt(n2);
  const Mat3 q = quaternion_to_matrix(w * inv, x * inv, y * inv, z * inv);
  return Rotation{s.inv_root * q * s.root};
}

SymmetricForm averaged_form(const SymmetricForm& b, int n_samples, std::mt19937_64& rng) {
  if (n_samples < 1) {
    throw Error("averaged_form: n_samples must be at least 1");
  }
  Mat3 acc;
  for (int i = 0; i < n_samples; ++i) {
    const Rotation d = haar_sample(b, rng);
    acc = acc + d.m.transposed() * d.m;
  }
  return SymmetricForm(symmetrized(acc / static_cast<double>(n_samples)));
}

FormOracle::FormOracle(const SymmetricForm& b, double tol) : b_(b), tol_(tol), tag_("so-oracle") {
  ensure_well_conditioned(b_);
}

Rotation FormOracle::transport(const Flag& from, const Flag& to) const {
  return rotform::transport(b_, from, to, tol_);
}

FormOracle make_oracle(const SymmetricForm& b, double tol) { return FormOracle(b, tol); }

SymmetricForm random_spd_form(std::mt19937_64& rng, double max_condition) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = normal(rng);
    const Mat3 ata = a.transposed() * a;
    const double eps = 1e-3 * ata.trace() / 3.0;
    const SymmetricForm form(symmetrized(ata) + Mat3::from_diag(eps, eps, eps));
    if (condition_number(form) <= max_condition) return form;
  }
  throw Error("random_spd_form: no sample met the condition bound");
}

}  // namespace rotform

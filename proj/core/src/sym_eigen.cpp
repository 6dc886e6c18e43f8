#include "rotform/sym_eigen.hpp"

#include <algorithm>
#include <array>

namespace rotform {

namespace {

double off_diagonal_norm(const Mat3& a) {
  return std::sqrt(a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2));
}

}  // namespace

SymmetricEigen eigen_symmetric(const Mat3& m) {
  Mat3 a = symmetrized(m);
  Mat3 v = Mat3::identity();
  const double scale = std::max(a.frobenius(), kZeroThreshold);

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < 3 && !converged; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (off_diagonal_norm(a) <= kJacobiOffDiagTol * scale) {
          converged = true;
          break;
        }
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        for (int r = 0; r < 3; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
    if (off_diagonal_norm(a) <= kJacobiOffDiagTol * scale) converged = true;
  }
  if (!converged) {
    throw IllConditionedForm("Jacobi eigendecomposition did not converge");
  }

  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (int i = 0; i < 3; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace rotform

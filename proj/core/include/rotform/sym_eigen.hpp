#pragma once

#include "rotform/geometry.hpp"

namespace rotform {

inline constexpr double kJacobiOffDiagTol = 1e-13;  // relative to the Frobenius norm
inline constexpr int kJacobiMaxSweeps = 50;

/// Eigendecomposition of a symmetric 3x3 matrix: m = V diag(values) V^T with
/// orthonormal columns V, eigenvalues sorted ascending.
struct SymmetricEigen {
  Vec3 values;
  Mat3 vectors;  // column k is the eigenvector for values[k]
};

/// Cyclic Jacobi rotations. Throws IllConditionedForm if the off-diagonal
/// mass has not dropped below kJacobiOffDiagTol * |m|_F after
/// kJacobiMaxSweeps sweeps.
SymmetricEigen eigen_symmetric(const Mat3& m);

}  // namespace rotform

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spinrev {

/// Eigenpairs of a real symmetric tridiagonal matrix, eigenvalues ascending,
/// eigenvectors as orthonormal columns. Each column is signed so that its
/// largest-magnitude entry is positive.
struct TridiagonalEigensystem {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
};

enum class VectorMethod {
  Auto,              // QlAccumulate for small matrices, InverseIteration otherwise
  QlAccumulate,      // rotations accumulated during the QL sweeps, O(n^3)
  InverseIteration,  // QL eigenvalues, then one inverse iteration per value, O(n^2)
};

/// Largest dimension for which VectorMethod::Auto accumulates QL rotations.
inline constexpr int kQlAccumulateLimit = 256;

/// Implicit-shift QL iteration with a cap of 30 sweeps per eigenvalue.
/// `off[i]` couples rows i and i+1. Throws Error{Convergence} on failure.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off);

TridiagonalEigensystem tridiagonal_eigensystem(std::span<const double> diag,
                                               std::span<const double> off,
                                               VectorMethod method = VectorMethod::Auto);

}  // namespace spinrev

#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace spinrev_test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline double uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Eigen::Matrix2cd pauli_x() { return (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(); }
inline Eigen::Matrix2cd pauli_y() {
  using c = std::complex<double>;
  return (Eigen::Matrix2cd() << 0, c(0, -1), c(0, 1), 0).finished();
}
inline Eigen::Matrix2cd pauli_z() { return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(); }

// Single-site operator at position `pos` (0 = most significant) of `sites`.
inline Eigen::MatrixXcd embed(const Eigen::Matrix2cd& op, int pos, int sites) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int p = 0; p < sites; ++p) {
    out = kron(out, p == pos ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd::Identity(2, 2));
  }
  return out;
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace spinrev_test

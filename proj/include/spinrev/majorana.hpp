#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinrev/profiles.hpp"

namespace spinrev {

/// Majorana coupling matrix of the extended chain. With 1-based indices
/// k = 1..2N+2 it is A_{k,k+1} = i b_k, A_{k+1,k} = -i b_k, zero elsewhere,
/// so that H = 1/2 sum_{kl} A_{kl} gamma_k gamma_l. The evolution time is
/// folded into b, hence all propagators below are taken at t = 1.
struct CouplingMatrix {
  int n = 0;
  std::vector<double> offdiag;  // b_1 .. b_{2N+1}, stored 0-based

  int dim() const { return 2 * n + 2; }
  Eigen::MatrixXcd dense() const;
  void validate() const;
};

/// Permutation of Majorana indices with signs: gamma_k -> sign[k] gamma_{perm[k]}.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(int size);
  int size() const { return static_cast<int>(perm.size()); }
  void validate() const;
  /// Apply `this` first, then `next`.
  SignedPermutation then(const SignedPermutation& next) const;
  Eigen::MatrixXd to_matrix() const;
  bool operator==(const SignedPermutation&) const = default;
};

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;     // ascending
  Eigen::MatrixXcd eigenvectors;  // orthonormal columns
};

CouplingMatrix build_coupling_matrix(const StaticProfile& profile);

/// Largest deviation between the Majorana equation-of-motion generator of
/// the profile, rescaled to unit duration, and -pi/(2 t_N) S_y for spin
/// s = N + 1/2 written in the ascending S_z basis.
double spin_y_deviation(const StaticProfile& profile);
double spin_y_check(int n);

/// Eigenvalues only, O(n^2).
std::vector<double> numeric_eigenvalues(const CouplingMatrix& a);
SpectralDecomposition numeric_spectrum(const CouplingMatrix& a);

/// The sign convention used for s_k in the closed-form spectrum.
/// Corrected: s_k = sgn(2k - 2N - 3), which matches diagonalization.
/// AsPrinted: s_k = sgn(2N + 3 - 2k); only differs from Corrected for m > 0.
enum class SignConvention { Corrected, AsPrinted };

std::vector<double> closed_form_spectrum(int n, int m,
                                         SignConvention convention = SignConvention::Corrected);

struct SylvesterKac {
  Eigen::MatrixXd matrix;                // (n+1) x (n+1), non-symmetric
  std::vector<double> claimed_eigenvalues;  // ascending
};

/// Sylvester-Kac type matrix B(n, a). Odd n admits any a >= 0 with
/// eigenvalues +-(pi/4)(2j+1+a), j = 0..(n-1)/2; even n requires a = 0.
SylvesterKac sylvester_kac(int n, double a);

/// Heisenberg propagator G(t) of the Majorana vector, gamma(t) = G(t) gamma(0)
/// with gamma(t) = e^{iHt} gamma e^{-iHt}. Equals exp(-2iAt) = exp(2i conj(A) t).
Eigen::MatrixXcd evolve_majorana(const CouplingMatrix& a, double t);
Eigen::MatrixXcd evolve_majorana(const SpectralDecomposition& spectrum, double t);

/// Decodes a matrix whose rows each hold exactly one entry within tol of +-1.
/// Throws Error{NotASignedPermutation} naming the worst offending entry.
SignedPermutation extract_signed_permutation(const Eigen::MatrixXcd& m, double tol);

/// Target map on indices 0..2N+3: the edge Majoranas 0 and 2N+3 are fixed,
/// otherwise k -> (-1)^{k-1} (2N+3-k).
SignedPermutation majorana_reversal_target(int n);

/// Propagator indices are 1..2N+2; lift to 0..2N+3 with fixed edges.
SignedPermutation embed_bulk(const SignedPermutation& bulk);

/// Largest entry deviation between a propagator on 1..2N+2 and the target.
double reversal_deviation(const Eigen::MatrixXcd& propagator, int n);

/// Braid gamma_i -> gamma_j, gamma_j -> -gamma_i applied after p.
SignedPermutation braid(const SignedPermutation& p, int i, int j);

/// N+1 rounds of even-edge braids (2k+1, 2k+2), k = 0..N, followed by
/// odd-edge braids (2k, 2k+1), k = 1..N, on indices 0..2N+3.
SignedPermutation braid_pulse_sequence(int n);

/// Per-vector deviation from v_j = i (-1)^{N+k-j} v_{2N+3-j} (1-based k, j),
/// minimized over a global phase per eigenvector. Throws Error{Degenerate}.
double eigenvector_symmetry_check(const SpectralDecomposition& spectrum);

}  // namespace spinrev

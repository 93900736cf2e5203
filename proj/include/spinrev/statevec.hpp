#pragma once

#include <Eigen/Dense>

#include "spinrev/pauli.hpp"
#include "spinrev/profiles.hpp"

namespace spinrev {

// Dense operators act on 2^sites amplitudes. Site order: letter/site 0 of a
// string is the most significant bit of the basis index. On the plain chain
// site 1 maps to position 0; on the extended chain the edge site 0 maps to
// position 0 and site N+1 to position N+1.
using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr int kMaxDenseSites = 13;
inline constexpr int kMaxPlainSites = 12;
inline constexpr int kMaxExtendedBulk = 10;
inline constexpr int kMaxBellChain = 6;

/// Site count of a 2^n x 2^n operator; throws if the dimension is not a power of two.
int site_count(const DenseOperator& op);

DenseOperator pauli_to_dense(const PauliString& p);

/// Plain: J_0 X_1 + sum J_k X_k X_{k+1} + J_N X_N - sum h_k Z_k on N sites.
/// Extended: sum_{k=0}^{N} J_k X_k X_{k+1} - sum h_k Z_k on sites 0..N+1.
DenseOperator build_hamiltonian(const StaticProfile& profile, bool extended);

/// e^{-iHt}. Uses the real symmetric solver whenever H has no imaginary part.
DenseOperator exponentiate(const DenseOperator& h, double t);

/// Site mirror k <-> N+1-k on the plain chain.
DenseOperator reversal_unitary(int n);

struct PhaseDistance {
  double distance = 0.0;
  bool ambiguous = false;  // |tr(V^dag U)| too small to fix the phase; grid search used
};

/// min over phi of max |U - e^{i phi} V|.
PhaseDistance phase_distance(const DenseOperator& u, const DenseOperator& v);

/// H_J = X_1 + sum X_k X_{k+1} + X_N and H_h = sum Z_k on the plain chain.
DenseOperator uniform_ising_hamiltonian(int n);
DenseOperator uniform_field_hamiltonian(int n);

/// (e^{i pi/4 H_h} e^{i pi/4 H_J})^{N+1}.
DenseOperator pulse_sequence_unitary(int n);

/// gamma_idx on the extended chain, idx in [0, 2N+3]:
/// gamma_{2k} = P(0,k-1) X_k, gamma_{2k+1} = P(0,k-1) Y_k.
PauliString jordan_wigner_majorana(int n, int idx);

/// P(a,b) = prod_{j=a}^{b} (-Z_j) on the extended chain.
PauliString parity_string(int n, int a, int b);

/// Heisenberg image U^dag p U, matched against the Pauli basis. Throws
/// Error{NotAPauliString} unless exactly one coefficient has unit modulus
/// within tol and the phase lies within tol of a quarter turn.
PauliString heisenberg_image(const DenseOperator& u, const PauliString& p, double tol);

/// e^{-i H~ T} on the extended chain for the profile's duration T.
DenseOperator extended_evolution(const StaticProfile& profile);

struct ParityStringCheck {
  double parity_distance = 0.0;    // |U^dag P(0,k) U - i X_0 X_{N+1} P(0,N-k)|_max
  double majorana_distance = 0.0;  // worst |U^dag gamma_j U - target_j|_max over all j
};

ParityStringCheck parity_string_check(const StaticProfile& profile, int k);
ParityStringCheck parity_string_check(int n, int k);

enum class EdgeState { PlusPlus, MinusMinus };

/// Bulk block <ee| U |ee> of an operator on the extended chain.
DenseOperator edge_projected(const DenseOperator& u_ext, EdgeState edges);

/// max |[U, X_0]|, |[U, X_{N+1}]| for an extended-chain operator.
double edge_commutator(const DenseOperator& u_ext);

}  // namespace spinrev

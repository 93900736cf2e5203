#pragma once

#include <array>
#include <vector>

#include "spinrev/statevec.hpp"

namespace spinrev {

/// Bipartition of `sites` qubits; positions follow the dense site order.
struct CutSpec {
  int sites = 0;
  std::vector<int> left;

  void validate() const;
};

/// Cut of the Bell layout [chain 1..N, ancilla 1..N] between chain sites
/// floor(N/2) and floor(N/2)+1, each ancilla grouped with its partner.
CutSpec center_cut(int n);

/// Von Neumann entropy of the left reduced state, in bits.
double entanglement_entropy(const StateVector& psi, const CutSpec& cut);

struct CapacityResult {
  double y_star = 0.0;
  double alpha = 0.0;
};

/// 2 sqrt(y(1-y)) log2(y/(1-y)) and its derivative.
double capacity_objective(double y);
double capacity_derivative(double y);

CapacityResult capacity_alpha();

double lower_bound_time(int n);

struct OptimalityRatio {
  double ratio = 0.0;  // t_N / (N / alpha)
  double bound = 0.0;  // alpha pi (1 + 1/N) / 4
};

OptimalityRatio optimality_ratio(int n);

/// Singular values of the Pauli-pair coefficient matrix of a 4x4 Hermitian
/// operator, descending. Rejects operators with single-site components.
std::array<double, 3> canonical_coefficients(const DenseOperator& h2);

struct TracePoint {
  double t = 0.0;
  double entropy = 0.0;
  double bound = 0.0;  // alpha * t * max_coupling
};

/// N Bell pairs between chain and ancilla; the chain evolves under the static
/// reversal Hamiltonian for t_j = j t_N / steps, j = 0..steps.
std::vector<TracePoint> bell_experiment(int n, int steps);

}  // namespace spinrev

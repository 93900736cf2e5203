#pragma once

#include <optional>
#include <vector>

namespace spinrev {

// Chain length and family parameter. n counts bulk sites.
struct ChainSpec {
  int n = 1;
  int m = 0;

  void validate() const;
};

enum class Protocol : int {
  Static = 1,   // engineered time-independent couplings, duration t_N
  Pulsed = 2,   // alternating uniform Ising / uniform field pulses
  Family = 3,   // m-parameterized static family, duration 1
};

// Coefficients of
//   H = J_0 X_1 + sum_{k=1}^{N-1} J_k X_k X_{k+1} + J_N X_N - sum_{k=1}^{N} h_k Z_k
// together with the evolution time. J has n+1 entries (J[0], J[n] are the
// single-site boundary terms), h has n entries with h[k-1] = h_k.
struct StaticProfile {
  int n = 0;
  std::optional<int> m;
  Protocol protocol = Protocol::Static;
  std::vector<double> J;
  std::vector<double> h;
  double duration = 0.0;

  double field(int k) const { return h.at(static_cast<std::size_t>(k - 1)); }
  void validate() const;
};

enum class Generator { UniformIsing, UniformField };

struct PulseStep {
  Generator generator;
  double angle;
};

struct PulseSchedule {
  std::vector<PulseStep> steps;
};

// Selects the on-site field of the m-family. AsPrinted doubles every field and
// breaks reversal; it exists to demonstrate that failure.
enum class FieldFactor { Corrected, AsPrinted };

double reversal_time(int n);

// a_k = pi sqrt((N+1)^2 - (N+1-k)^2) / (4 t_N), 0 <= k <= 2N+2.
double a_coeff(int n, int k);

StaticProfile protocol1_profile(int n);
StaticProfile protocol3_profile(int n, int m, FieldFactor field = FieldFactor::Corrected);

// Unit generator coefficients and the total pulse time (N+1) pi/2. The
// coefficients are never applied simultaneously; see protocol2_schedule.
StaticProfile protocol2_profile(int n);
PulseSchedule protocol2_schedule(int n);

struct CouplingBound {
  double value = 0.0;
  bool has_two_site = false;  // false for n == 1
};

// Largest |J_k| over the two-site couplings k = 1..n-1.
CouplingBound max_coupling(const StaticProfile& profile);

// 1 - min_k J_k / max_k J_k over k = 0..n (boundary terms included).
double uniformity(const StaticProfile& profile);

// Duration rescaled so that the strongest X-type coefficient (boundary
// terms included) is one. Equals t_N for protocol 1.
double normalized_time(const StaticProfile& profile);

}  // namespace spinrev

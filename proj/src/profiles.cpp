#include "spinrev/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinrev/error.hpp"

namespace spinrev {

namespace {

constexpr double kPi = std::numbers::pi;

void require_chain(int n) {
  require(n >= 1, "chain length must be >= 1, got " + std::to_string(n));
}

}  // namespace

void ChainSpec::validate() const {
  require_chain(n);
  require(m >= 0, "family parameter m must be >= 0, got " + std::to_string(m));
}

void StaticProfile::validate() const {
  require_chain(n);
  require(J.size() == static_cast<std::size_t>(n) + 1, "profile J must have n+1 entries");
  require(h.size() == static_cast<std::size_t>(n), "profile h must have n entries");
  auto finite = [](double x) { return std::isfinite(x); };
  require(std::all_of(J.begin(), J.end(), finite) && std::all_of(h.begin(), h.end(), finite) &&
              std::isfinite(duration),
          "profile entries must be finite");
  if (m) require(*m >= 0, "profile m must be >= 0");
}

double reversal_time(int n) {
  require_chain(n);
  const double np1 = n + 1.0;
  return kPi * std::sqrt(np1 * np1 - static_cast<double>(n % 2)) / 4.0;
}

double a_coeff(int n, int k) {
  require_chain(n);
  require(k >= 0 && k <= 2 * n + 2,
          "a_k index out of range [0, 2N+2]: k=" + std::to_string(k));
  // (N+1)^2 - (N+1-k)^2 = k (2N+2-k), exact in integers.
  const double radicand = static_cast<double>(k) * static_cast<double>(2 * n + 2 - k);
  return kPi * std::sqrt(radicand) / (4.0 * reversal_time(n));
}

StaticProfile protocol1_profile(int n) {
  require_chain(n);
  StaticProfile p;
  p.n = n;
  p.protocol = Protocol::Static;
  p.J.resize(n + 1);
  p.h.resize(n);
  for (int k = 0; k <= n; ++k) p.J[k] = a_coeff(n, 2 * k + 1);
  for (int k = 1; k <= n; ++k) p.h[k - 1] = a_coeff(n, 2 * k);
  p.duration = reversal_time(n);
  return p;
}

StaticProfile protocol3_profile(int n, int m, FieldFactor field) {
  ChainSpec{n, m}.validate();
  StaticProfile p;
  p.n = n;
  p.m = m;
  p.protocol = Protocol::Family;
  p.J.resize(n + 1);
  p.h.resize(n);
  const double field_scale = field == FieldFactor::Corrected ? kPi / 2.0 : kPi;
  for (int k = 0; k <= n; ++k) {
    const double lo = 2.0 * k + 1 + 4.0 * m;
    const double hi = 2.0 * n + 1 - 2.0 * k + 4.0 * m;
    p.J[k] = kPi / 4.0 * std::sqrt(lo * hi);
  }
  for (int k = 1; k <= n; ++k)
    p.h[k - 1] = field_scale * std::sqrt(static_cast<double>(k) * (n + 1 - k));
  p.duration = 1.0;
  return p;
}

StaticProfile protocol2_profile(int n) {
  require_chain(n);
  StaticProfile p;
  p.n = n;
  p.protocol = Protocol::Pulsed;
  p.J.assign(n + 1, 1.0);
  p.h.assign(n, 1.0);
  p.duration = (n + 1) * kPi / 2.0;
  return p;
}

PulseSchedule protocol2_schedule(int n) {
  require_chain(n);
  PulseSchedule s;
  s.steps.reserve(2 * (n + 1));
  // U = (e^{i pi/4 H_h} e^{i pi/4 H_J})^{N+1}: the Ising factor acts first.
  for (int round = 0; round <= n; ++round) {
    s.steps.push_back({Generator::UniformIsing, kPi / 4.0});
    s.steps.push_back({Generator::UniformField, kPi / 4.0});
  }
  return s;
}

CouplingBound max_coupling(const StaticProfile& profile) {
  profile.validate();
  CouplingBound b;
  for (int k = 1; k < profile.n; ++k) {
    b.value = std::max(b.value, std::abs(profile.J[k]));
    b.has_two_site = true;
  }
  return b;
}

double uniformity(const StaticProfile& profile) {
  profile.validate();
  double lo = std::abs(profile.J.front());
  double hi = lo;
  for (double j : profile.J) {
    lo = std::min(lo, std::abs(j));
    hi = std::max(hi, std::abs(j));
  }
  if (hi == 0.0) fail(ErrorCode::InvalidArgument, "uniformity undefined for zero couplings");
  return 1.0 - lo / hi;
}

double normalized_time(const StaticProfile& profile) {
  profile.validate();
  double hi = 0.0;
  for (double j : profile.J) hi = std::max(hi, std::abs(j));
  if (profile.protocol == Protocol::Pulsed) return profile.duration;
  return profile.duration * hi;
}

}  // namespace spinrev

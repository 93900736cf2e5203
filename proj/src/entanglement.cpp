#include "spinrev/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinrev/error.hpp"

namespace spinrev {

namespace {

using cd = std::complex<double>;
using Index = Eigen::Index;

constexpr double kZeroWeight = 1e-14;

}  // namespace

void CutSpec::validate() const {
  require(sites >= 1 && sites <= 2 * kMaxBellChain, "cut: site count out of range");
  std::vector<bool> seen(static_cast<std::size_t>(sites), false);
  for (int p : left) {
    require(p >= 0 && p < sites, "cut: site index out of range");
    require(!seen[static_cast<std::size_t>(p)], "cut: repeated site");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

CutSpec center_cut(int n) {
  require(n >= 1, "center_cut: N must be positive");
  CutSpec cut{2 * n, {}};
  for (int k = 0; k < n / 2; ++k) {
    cut.left.push_back(k);
    cut.left.push_back(n + k);
  }
  std::sort(cut.left.begin(), cut.left.end());
  return cut;
}

double entanglement_entropy(const StateVector& psi, const CutSpec& cut) {
  cut.validate();
  require(psi.size() == Index{1} << cut.sites, "entropy: state dimension does not match the cut");
  require(std::abs(psi.norm() - 1.0) <= 1e-10, "entropy: state is not normalized");

  std::vector<bool> is_left(static_cast<std::size_t>(cut.sites), false);
  for (int p : cut.left) is_left[static_cast<std::size_t>(p)] = true;
  const int nl = static_cast<int>(cut.left.size());
  const int nr = cut.sites - nl;

  Eigen::MatrixXcd m(Index{1} << nl, Index{1} << nr);
  for (Index i = 0; i < psi.size(); ++i) {
    Index l = 0, r = 0;
    for (int p = 0; p < cut.sites; ++p) {
      const Index bit = (i >> (cut.sites - 1 - p)) & 1;
      if (is_left[static_cast<std::size_t>(p)]) {
        l = (l << 1) | bit;
      } else {
        r = (r << 1) | bit;
      }
    }
    m(l, r) = psi(i);
  }
  const Eigen::VectorXd s = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
  double entropy = 0.0;
  for (Index k = 0; k < s.size(); ++k) {
    const double w = s(k) * s(k);
    if (w > kZeroWeight) entropy -= w * std::log2(w);
  }
  return std::max(entropy, 0.0);
}

double capacity_objective(double y) {
  return 2 * std::sqrt(y * (1 - y)) * std::log2(y / (1 - y));
}

double capacity_derivative(double y) {
  const double g = std::sqrt(y * (1 - y));
  return (1 - 2 * y) * std::log2(y / (1 - y)) / g + 2 / (std::numbers::ln2 * g);
}

CapacityResult capacity_alpha() {
  double lo = 0.5, hi = 1 - 1e-9;
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = capacity_objective(a), fb = capacity_objective(b);
  while (hi - lo > 1e-6) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = capacity_objective(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = capacity_objective(a);
    }
  }
  // f' is positive left of the maximizer and negative right of it.
  while (hi - lo > 1e-13) {
    const double mid = (lo + hi) / 2;
    if (capacity_derivative(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double y = (lo + hi) / 2;
  return {y, capacity_objective(y)};
}

double lower_bound_time(int n) {
  require(n >= 1, "lower_bound_time: N must be positive");
  return n / capacity_alpha().alpha;
}

OptimalityRatio optimality_ratio(int n) {
  require(n >= 1, "optimality_ratio: N must be positive");
  const double alpha = capacity_alpha().alpha;
  OptimalityRatio out{reversal_time(n) / (n / alpha),
                      alpha * std::numbers::pi * (1 + 1.0 / n) / 4};
  if (out.ratio > out.bound * (1 + 1e-12)) {
    fail(ErrorCode::Internal, "optimality ratio exceeds its bound at N = " + std::to_string(n));
  }
  return out;
}

std::array<double, 3> canonical_coefficients(const DenseOperator& h2) {
  require(h2.rows() == 4 && h2.cols() == 4, "canonical_coefficients: need a 4x4 operator");
  const double scale = std::max(1.0, h2.cwiseAbs().maxCoeff());
  require((h2 - h2.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale,
          "canonical_coefficients: operator is not Hermitian");

  static constexpr Pauli kLetters[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  auto coeff = [&](int a, int b) {
    const DenseOperator p = pauli_to_dense(PauliString({kLetters[a], kLetters[b]}));
    return ((p * h2).trace() / 4.0).real();
  };
  for (int a = 1; a < 4; ++a) {
    if (std::abs(coeff(a, 0)) > 1e-12 * scale || std::abs(coeff(0, a)) > 1e-12 * scale) {
      fail(ErrorCode::InvalidArgument,
           "canonical_coefficients: operator has single-site terms; remove them first");
    }
  }
  Eigen::Matrix3d c;
  for (int a = 1; a < 4; ++a) {
    for (int b = 1; b < 4; ++b) c(a - 1, b - 1) = coeff(a, b);
  }
  const Eigen::Vector3d s = Eigen::JacobiSVD<Eigen::Matrix3d>(c).singularValues();
  return {s(0), s(1), s(2)};
}

std::vector<TracePoint> bell_experiment(int n, int steps) {
  require(n >= 1, "bell_experiment: N must be positive");
  require(steps >= 1, "bell_experiment: steps must be positive");
  if (n > kMaxBellChain) {
    fail(ErrorCode::Resource, "bell_experiment: N = " + std::to_string(n) +
                                  " exceeds the limit of " + std::to_string(kMaxBellChain));
  }
  const StaticProfile profile = protocol1_profile(n);
  const double alpha = capacity_alpha().alpha;
  const double coupling = max_coupling(profile).value;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_hamiltonian(profile, false).real());
  if (es.info() != Eigen::Success) fail(ErrorCode::Convergence, "Hermitian eigensolver failed");
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Index dim = v.rows();
  const CutSpec cut = center_cut(n);

  // (U (x) I) sum_x |x>|x> / sqrt(2^N) has amplitude U(c, a) / sqrt(2^N) at |c>|a>.
  std::vector<TracePoint> trace;
  trace.reserve(static_cast<std::size_t>(steps) + 1);
  for (int j = 0; j <= steps; ++j) {
    const double t = profile.duration * j / steps;
    const Eigen::VectorXcd d =
        (es.eigenvalues().array() * t).unaryExpr([](double a) { return std::polar(1.0, -a); });
    const Eigen::MatrixXcd u = v.cast<cd>() * d.asDiagonal() * v.transpose().cast<cd>();
    StateVector psi(dim * dim);
    for (Index c = 0; c < dim; ++c) {
      for (Index a = 0; a < dim; ++a) psi(c * dim + a) = u(c, a);
    }
    psi /= std::sqrt(static_cast<double>(dim));
    trace.push_back({t, entanglement_entropy(psi, cut), alpha * t * coupling});
  }
  return trace;
}

}  // namespace spinrev

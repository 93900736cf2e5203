#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinrev/entanglement.hpp"
#include "spinrev/error.hpp"
#include "support.hpp"

using namespace spinrev;
using doctest::Approx;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(int sites) {
  StateVector psi(Eigen::Index{1} << sites);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    psi(i) = cd(spinrev_test::uniform_real(-1, 1), spinrev_test::uniform_real(-1, 1));
  }
  return psi.normalized();
}

// Entropy from an explicit partial trace and a Hermitian eigensolver.
double partial_trace_entropy(const StateVector& psi, const CutSpec& cut) {
  std::vector<bool> left(static_cast<std::size_t>(cut.sites), false);
  for (int p : cut.left) left[static_cast<std::size_t>(p)] = true;
  const Eigen::Index dl = Eigen::Index{1} << cut.left.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dl, dl);
  auto split = [&](Eigen::Index i, Eigen::Index& l, Eigen::Index& r) {
    l = r = 0;
    for (int p = 0; p < cut.sites; ++p) {
      const Eigen::Index bit = (i >> (cut.sites - 1 - p)) & 1;
      if (left[static_cast<std::size_t>(p)]) {
        l = 2 * l + bit;
      } else {
        r = 2 * r + bit;
      }
    }
  };
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    for (Eigen::Index j = 0; j < psi.size(); ++j) {
      Eigen::Index li, ri, lj, rj;
      split(i, li, ri);
      split(j, lj, rj);
      if (ri == rj) rho(li, lj) += psi(i) * std::conj(psi(j));
    }
  }
  const Eigen::VectorXd w = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho).eigenvalues();
  double s = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (w(k) > 1e-14) s -= w(k) * std::log2(w(k));
  }
  return s;
}

StateVector bell_dressed(const DenseOperator& u) {
  const Eigen::Index dim = u.rows();
  StateVector psi(dim * dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index a = 0; a < dim; ++a) psi(c * dim + a) = u(c, a);
  }
  return psi / std::sqrt(static_cast<double>(dim));
}

}  // namespace

TEST_CASE("entropy of simple states") {
  StateVector product = StateVector::Zero(4);
  product(0) = 1.0;
  const CutSpec cut{2, {0}};
  CHECK(entanglement_entropy(product, cut) == 0.0);

  StateVector bell = StateVector::Zero(4);
  bell(0) = bell(3) = 1 / std::sqrt(2.0);
  CHECK(entanglement_entropy(bell, cut) == Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(entanglement_entropy(2.0 * bell, cut), Error);
  CHECK_THROWS_AS(entanglement_entropy(bell, CutSpec{3, {0}}), Error);
  CHECK_THROWS_AS(entanglement_entropy(bell, CutSpec{2, {0, 0}}), Error);
}

TEST_CASE("entropy agrees with the partial trace and is symmetric") {
  for (int trial = 0; trial < 20; ++trial) {
    const int sites = spinrev_test::uniform_int(2, 7);
    CutSpec cut{sites, {}};
    std::vector<int> rest;
    for (int p = 0; p < sites; ++p) {
      (spinrev_test::uniform_int(0, 1) ? cut.left : rest).push_back(p);
    }
    const StateVector psi = random_state(sites);
    const double s = entanglement_entropy(psi, cut);
    CHECK(s == Approx(partial_trace_entropy(psi, cut)).epsilon(1e-10));
    CHECK(s == Approx(entanglement_entropy(psi, CutSpec{sites, rest})).epsilon(1e-10));
  }
}

TEST_CASE("centre cut of the Bell layout") {
  const CutSpec c4 = center_cut(4);
  CHECK(c4.sites == 8);
  CHECK(c4.left == std::vector<int>{0, 1, 4, 5});
  CHECK(center_cut(1).left.empty());

  const StateVector mirrored = bell_dressed(reversal_unitary(4));
  CHECK(entanglement_entropy(mirrored, c4) == Approx(4.0).epsilon(1e-12));
  const StateVector untouched = bell_dressed(DenseOperator::Identity(16, 16));
  CHECK(entanglement_entropy(untouched, c4) < 1e-12);
}

TEST_CASE("capacity constant") {
  const CapacityResult c = capacity_alpha();
  CHECK(c.alpha == Approx(1.912).epsilon(1e-3 / 1.912));
  CHECK(c.y_star == Approx(0.9168).epsilon(1e-4));
  CHECK(capacity_objective(c.y_star) == c.alpha);
  CHECK(capacity_objective(c.y_star - 1e-6) <= c.alpha);
  CHECK(capacity_objective(c.y_star + 1e-6) <= c.alpha);
  CHECK(capacity_objective(0.5) == 0.0);
  CHECK(capacity_objective(1 - 1e-12) < 1e-4);

  SUBCASE("finite-difference oracle for the maximizer") {
    double best_y = 0.5, best_f = 0.0;
    for (int i = 1; i < 200000; ++i) {
      const double y = 0.5 + 0.5 * i / 200000.0;
      const double f = capacity_objective(y);
      if (f > best_f) {
        best_f = f;
        best_y = y;
      }
    }
    CHECK(c.y_star == Approx(best_y).epsilon(1e-5));
    CHECK(c.alpha == Approx(best_f).epsilon(1e-10));
    const double h = 1e-6;
    for (double y : {0.6, 0.8, 0.95, 0.99}) {
      const double fd = (capacity_objective(y + h) - capacity_objective(y - h)) / (2 * h);
      CHECK(capacity_derivative(y) == Approx(fd).epsilon(1e-6));
    }
    CHECK(capacity_derivative(c.y_star - 1e-6) > 0);
    CHECK(capacity_derivative(c.y_star + 1e-6) < 0);
  }
}

TEST_CASE("lower bound and optimality ratio") {
  CHECK(lower_bound_time(10) == Approx(5.2293).epsilon(1e-4));
  CHECK(lower_bound_time(1) == Approx(0.5229).epsilon(1e-3));
  CHECK(lower_bound_time(14) == Approx(2 * lower_bound_time(7)).epsilon(1e-15));
  CHECK_THROWS_AS(lower_bound_time(0), Error);

  const double alpha = capacity_alpha().alpha;
  const OptimalityRatio r10 = optimality_ratio(10);
  CHECK(r10.ratio == Approx(1.6522).epsilon(1e-3));
  CHECK(r10.ratio == Approx(alpha * kPi * 1.1 / 4).epsilon(1e-12));
  const OptimalityRatio r1 = optimality_ratio(1);
  CHECK(r1.ratio == Approx(alpha * kPi * std::sqrt(3.0) / 4).epsilon(1e-12));
  CHECK(r1.ratio == Approx(2.601).epsilon(1e-3));
  CHECK(r1.bound == Approx(3.004).epsilon(1e-3));
  for (int n = 1; n <= 10000; ++n) {
    const OptimalityRatio r = optimality_ratio(n);
    if (r.ratio > r.bound * (1 + 1e-12)) FAIL("ratio above bound at N = " << n);
  }
  CHECK(optimality_ratio(10000).ratio == Approx(alpha * kPi / 4).epsilon(1e-4));
}

TEST_CASE("canonical coefficients") {
  using spinrev_test::kron;
  const DenseOperator xx = kron(spinrev_test::pauli_x(), spinrev_test::pauli_x());
  const DenseOperator yy = kron(spinrev_test::pauli_y(), spinrev_test::pauli_y());
  const DenseOperator zz = kron(spinrev_test::pauli_z(), spinrev_test::pauli_z());

  auto mu = canonical_coefficients(0.7 * xx);
  CHECK(mu[0] == Approx(0.7));
  CHECK(mu[1] == Approx(0.0));
  CHECK(mu[2] == Approx(0.0));

  mu = canonical_coefficients(xx + yy + zz);
  CHECK(mu[0] + mu[1] + mu[2] == Approx(3.0));
  CHECK(mu[2] == Approx(1.0));

  // Random local unitaries exp(-i theta n.sigma) on each side.
  for (int trial = 0; trial < 10; ++trial) {
    auto local = [] {
      DenseOperator g = spinrev_test::uniform_real(-1, 1) * spinrev_test::pauli_x() +
                        spinrev_test::uniform_real(-1, 1) * spinrev_test::pauli_y() +
                        spinrev_test::uniform_real(-1, 1) * spinrev_test::pauli_z();
      return exponentiate(g, spinrev_test::uniform_real(0, 3));
    };
    const DenseOperator v = kron(local(), local());
    mu = canonical_coefficients(v * xx * v.adjoint());
    CHECK(mu[0] == Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(mu[1]) < 1e-12);
    CHECK(std::abs(mu[2]) < 1e-12);
  }

  const DenseOperator with_local = xx + kron(spinrev_test::pauli_z(), DenseOperator::Identity(2, 2));
  CHECK_THROWS_AS(canonical_coefficients(with_local), Error);
  CHECK_THROWS_AS(canonical_coefficients(DenseOperator::Identity(2, 2)), Error);
}

TEST_CASE("Bell-pair experiment") {
  const double alpha = capacity_alpha().alpha;
  const std::vector<TracePoint> two = bell_experiment(2, 10);
  REQUIRE(two.size() == 11);
  CHECK(two.front().t == 0.0);
  CHECK(two.front().entropy < 1e-12);
  CHECK(two.back().t == Approx(reversal_time(2)));
  CHECK(two.back().entropy == Approx(2.0).epsilon(1e-6));

  const std::vector<TracePoint> four = bell_experiment(4, 40);
  for (const TracePoint& p : four) {
    CHECK(p.bound == Approx(alpha * p.t).epsilon(1e-12));
    CHECK(p.entropy - four.front().entropy <= alpha * p.t + 1e-6);
  }
  CHECK(four.back().entropy == Approx(4.0).epsilon(1e-6));

  // Odd chains: the centre site maps to itself, so only 2 floor(N/2) ebits cross.
  const std::vector<TracePoint> three = bell_experiment(3, 20);
  CHECK(three.back().entropy == Approx(2.0).epsilon(1e-6));
  for (const TracePoint& p : three) CHECK(p.entropy <= p.bound + 1e-6);

  CHECK(bell_experiment(2, 1).size() == 2);
  CHECK_THROWS_AS(bell_experiment(7, 10), Error);
  CHECK_THROWS_AS(bell_experiment(2, 0), Error);
}

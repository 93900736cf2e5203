#include "spinrev/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "spinrev/error.hpp"

namespace spinrev {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweepsPerValue = 30;

// QL with implicit Wilkinson shifts (EISPACK tql1/tql2 lineage).
// d: diagonal, overwritten with eigenvalues (unsorted).
// e: e[i] couples i and i+1; must have size n with e[n-1] = 0. Destroyed.
// z: if non-null, row-major n x n buffer whose row i holds eigenvector i;
//    rotations are applied to rows so the inner loop is contiguous.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, double* z) {
  const int n = static_cast<int>(d.size());
  const auto un = static_cast<std::size_t>(n);
  double shift_total = 0.0;
  double tst1 = 0.0;
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n - 1 && std::abs(e[m]) > kEps * tst1) ++m;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > kMaxSweepsPerValue) {
          fail(ErrorCode::Convergence, "tridiagonal QL did not converge for eigenvalue " +
                                           std::to_string(l) + " after " +
                                           std::to_string(kMaxSweepsPerValue) + " sweeps");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        shift_total += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (z) {
            double* zi = z + static_cast<std::size_t>(i) * un;
            double* zi1 = zi + un;
            for (int k = 0; k < n; ++k) {
              const double t = zi1[k];
              zi1[k] = s * zi[k] + c * t;
              zi[k] = c * zi[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > kEps * tst1);
    }
    d[l] += shift_total;
    e[l] = 0.0;
  }
}

void check_shape(std::span<const double> diag, std::span<const double> off) {
  require(!diag.empty(), "tridiagonal matrix must be non-empty");
  require(off.size() + 1 == diag.size(), "off-diagonal must have n-1 entries");
  for (double x : diag) require(std::isfinite(x), "tridiagonal entries must be finite");
  for (double x : off) require(std::isfinite(x), "tridiagonal entries must be finite");
}

void canonical_sign(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  if (v[arg] < 0) v = -v;
}

// Row-reduced LU of (T - lambda I) with partial pivoting, as in LAPACK dlagtf.
class ShiftedTridiagonalLu {
 public:
  ShiftedTridiagonalLu(std::span<const double> diag, std::span<const double> off, double lambda,
                       double pivot_floor)
      : n_(diag.size()), u0_(n_), u1_(n_, 0.0), u2_(n_, 0.0), l_(n_, 0.0), swap_(n_, 0) {
    double cur0 = diag[0] - lambda;
    double cur1 = n_ > 1 ? off[0] : 0.0;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      const double sub = off[i];
      const double a_next = diag[i + 1] - lambda;
      const double b_next = i + 2 < n_ ? off[i + 1] : 0.0;
      if (std::abs(cur0) >= std::abs(sub)) {
        u0_[i] = cur0;
        u1_[i] = cur1;
        l_[i] = cur0 != 0.0 ? sub / cur0 : 0.0;
        cur0 = a_next - l_[i] * cur1;
        cur1 = b_next;
      } else {
        swap_[i] = 1;
        u0_[i] = sub;
        u1_[i] = a_next;
        u2_[i] = b_next;
        l_[i] = cur0 / sub;
        cur0 = cur1 - l_[i] * a_next;
        cur1 = -l_[i] * b_next;
      }
    }
    u0_[n_ - 1] = cur0;
    for (double& u : u0_) {
      if (std::abs(u) < pivot_floor) u = u < 0 ? -pivot_floor : pivot_floor;
    }
  }

  void solve(std::vector<double>& y) const {
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (swap_[i]) {
        const double t = y[i];
        y[i] = y[i + 1];
        y[i + 1] = t - l_[i] * y[i];
      } else {
        y[i + 1] -= l_[i] * y[i];
      }
    }
    for (std::size_t i = n_; i-- > 0;) {
      double acc = y[i];
      if (i + 1 < n_) acc -= u1_[i] * y[i + 1];
      if (i + 2 < n_) acc -= u2_[i] * y[i + 2];
      y[i] = acc / u0_[i];
    }
  }

 private:
  std::size_t n_;
  std::vector<double> u0_, u1_, u2_, l_;
  std::vector<std::uint8_t> swap_;
};

// Eigenvectors of one unreduced block by inverse iteration, following the
// strategy of LAPACK dstein: perturb coincident shifts, reorthogonalize
// within clusters, accept after two iterations with a large growth factor.
// Clusters use a relative gap of 1e-6 rather than dstein's 1e-3: evenly
// spaced spectra of order n have relative gaps near 1/n and would otherwise
// form a single cluster with O(n^3) reorthogonalization.
Eigen::MatrixXd inverse_iteration(std::span<const double> diag, std::span<const double> off,
                                  const std::vector<double>& values) {
  const std::size_t k = diag.size();
  Eigen::MatrixXd vecs(k, values.size());
  if (k == 1) {
    vecs.setOnes();
    return vecs;
  }

  double onenrm = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double col = std::abs(diag[i]);
    if (i > 0) col += std::abs(off[i - 1]);
    if (i + 1 < k) col += std::abs(off[i]);
    onenrm = std::max(onenrm, col);
  }
  const double ortol = 1e-6 * onenrm;
  const double growth_target = std::sqrt(0.1 / static_cast<double>(k));
  const double pivot_floor = kEps * onenrm;
  constexpr int kMaxIterations = 5;
  constexpr int kExtraIterations = 2;

  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  std::size_t cluster_start = 0;
  double prev_shift = 0.0;
  std::vector<double> x(k);
  for (std::size_t j = 0; j < values.size(); ++j) {
    double shift = values[j];
    if (j > 0) {
      if (values[j] - values[j - 1] > ortol) cluster_start = j;
      const double pertol = 10.0 * std::abs(kEps * shift);
      if (shift - prev_shift < pertol) shift = prev_shift + pertol;
    }
    prev_shift = shift;

    ShiftedTridiagonalLu lu(diag, off, shift, pivot_floor);
    for (double& xi : x) xi = unif(rng);

    int accepted = 0;
    int iter = 0;
    for (; iter < kMaxIterations; ++iter) {
      double asum = 0.0;
      for (double xi : x) asum += std::abs(xi);
      const double scl = static_cast<double>(k) * pivot_floor / asum;
      for (double& xi : x) xi *= scl;
      lu.solve(x);

      if (j > cluster_start) {
        Eigen::Map<Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(k));
        for (std::size_t q = cluster_start; q < j; ++q) {
          const double proj = vecs.col(static_cast<Eigen::Index>(q)).dot(xv);
          xv -= proj * vecs.col(static_cast<Eigen::Index>(q));
        }
      }
      double big = 0.0;
      for (double xi : x) big = std::max(big, std::abs(xi));
      if (!std::isfinite(big)) {
        fail(ErrorCode::Convergence, "inverse iteration overflowed");
      }
      if (big < growth_target) continue;
      if (++accepted > kExtraIterations) break;
    }
    if (accepted <= kExtraIterations) {
      fail(ErrorCode::Convergence,
           "inverse iteration did not converge for eigenvalue " + std::to_string(values[j]));
    }
    Eigen::Map<Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(k));
    vecs.col(static_cast<Eigen::Index>(j)) = xv.normalized();
  }
  return vecs;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag,
                                            std::span<const double> off) {
  check_shape(diag, off);
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(off.begin(), off.end());
  e.push_back(0.0);
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

TridiagonalEigensystem tridiagonal_eigensystem(std::span<const double> diag,
                                               std::span<const double> off,
                                               VectorMethod method) {
  check_shape(diag, off);
  const auto n = static_cast<Eigen::Index>(diag.size());
  if (method == VectorMethod::Auto) {
    method = n <= kQlAccumulateLimit ? VectorMethod::QlAccumulate : VectorMethod::InverseIteration;
  }

  std::vector<double> values(diag.size());
  Eigen::MatrixXd vectors(n, n);

  if (method == VectorMethod::QlAccumulate) {
    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(off.begin(), off.end());
    e.push_back(0.0);
    // Row-major storage of V^T: row i is eigenvector i.
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> z =
        Eigen::MatrixXd::Identity(n, n);
    ql_implicit(d, e, z.data());
    std::vector<Eigen::Index> order(diag.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return d[a] < d[b]; });
    for (Eigen::Index c = 0; c < n; ++c) {
      values[c] = d[order[c]];
      vectors.col(c) = z.row(order[c]).transpose();
    }
  } else {
    double tnorm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = std::abs(diag[i]);
      if (i > 0) row += std::abs(off[i - 1]);
      if (i + 1 < n) row += std::abs(off[i]);
      tnorm = std::max(tnorm, row);
    }
    struct Pair {
      double value;
      Eigen::Index block_begin;
      Eigen::VectorXd vec;
    };
    std::vector<Pair> pairs;
    pairs.reserve(diag.size());
    Eigen::Index begin = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const bool split = i + 1 == n || std::abs(off[i]) <= kEps * tnorm;
      if (!split) continue;
      const auto len = static_cast<std::size_t>(i + 1 - begin);
      auto bd = diag.subspan(static_cast<std::size_t>(begin), len);
      auto bo = off.subspan(static_cast<std::size_t>(begin), len - 1);
      std::vector<double> bvals = tridiagonal_eigenvalues(bd, bo);
      Eigen::MatrixXd bvecs = inverse_iteration(bd, bo, bvals);
      for (std::size_t j = 0; j < bvals.size(); ++j) {
        Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
        full.segment(begin, static_cast<Eigen::Index>(len)) = bvecs.col(static_cast<Eigen::Index>(j));
        pairs.push_back({bvals[j], begin, std::move(full)});
      }
      begin = i + 1;
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.value < b.value; });
    for (Eigen::Index c = 0; c < n; ++c) {
      values[c] = pairs[c].value;
      vectors.col(c) = pairs[c].vec;
    }
  }

  for (Eigen::Index c = 0; c < n; ++c) canonical_sign(vectors.col(c));
  return {std::move(values), std::move(vectors)};
}

}  // namespace spinrev

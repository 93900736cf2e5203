#include "spinrev/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "spinrev/error.hpp"
#include "spinrev/tridiagonal.hpp"

namespace spinrev {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// i^p for integer p.
cd i_pow(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int sgn(int x) { return (x > 0) - (x < 0); }

// A is similar to the real symmetric tridiagonal C = D A D^{-1} with zero
// diagonal and off-diagonal b, D = diag(i^1, ..., i^{2N+2}).
TridiagonalEigensystem real_form(const CouplingMatrix& a) {
  a.validate();
  std::vector<double> diag(static_cast<std::size_t>(a.dim()), 0.0);
  return tridiagonal_eigensystem(diag, a.offdiag);
}

}  // namespace

void CouplingMatrix::validate() const {
  require(n >= 1, "coupling matrix needs n >= 1");
  require(offdiag.size() == static_cast<std::size_t>(2 * n + 1),
          "coupling matrix needs 2N+1 off-diagonal entries");
  for (double b : offdiag) require(std::isfinite(b), "coupling entries must be finite");
}

Eigen::MatrixXcd CouplingMatrix::dense() const {
  validate();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int k = 0; k + 1 < dim(); ++k) {
    m(k, k + 1) = cd(0.0, offdiag[k]);
    m(k + 1, k) = cd(0.0, -offdiag[k]);
  }
  return m;
}

SignedPermutation SignedPermutation::identity(int size) {
  require(size >= 0, "permutation size must be >= 0");
  SignedPermutation p;
  p.perm.resize(size);
  p.sign.assign(size, 1);
  for (int k = 0; k < size; ++k) p.perm[k] = k;
  return p;
}

void SignedPermutation::validate() const {
  require(perm.size() == sign.size(), "perm and sign sizes differ");
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    require(perm[k] >= 0 && static_cast<std::size_t>(perm[k]) < perm.size(),
            "permutation entry out of range");
    require(!seen[perm[k]], "permutation is not a bijection");
    seen[perm[k]] = 1;
    require(sign[k] == 1 || sign[k] == -1, "signs must be +-1");
  }
}

SignedPermutation SignedPermutation::then(const SignedPermutation& next) const {
  require(size() == next.size(), "composing permutations of different sizes");
  SignedPermutation out = *this;
  for (int k = 0; k < size(); ++k) {
    out.perm[k] = next.perm[perm[k]];
    out.sign[k] = sign[k] * next.sign[perm[k]];
  }
  return out;
}

Eigen::MatrixXd SignedPermutation::to_matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
  for (int k = 0; k < size(); ++k) m(k, perm[k]) = sign[k];
  return m;
}

CouplingMatrix build_coupling_matrix(const StaticProfile& profile) {
  profile.validate();
  require(profile.protocol != Protocol::Pulsed,
          "pulsed profiles have no single coupling matrix");
  CouplingMatrix a;
  a.n = profile.n;
  a.offdiag.resize(2 * profile.n + 1);
  for (int k = 0; k <= profile.n; ++k) a.offdiag[2 * k] = profile.J[k] * profile.duration;
  for (int k = 1; k <= profile.n; ++k) a.offdiag[2 * k - 1] = profile.field(k) * profile.duration;
  return a;
}

double spin_y_deviation(const StaticProfile& profile) {
  const CouplingMatrix a = build_coupling_matrix(profile);
  const int n = profile.n;
  const int dim = a.dim();
  const double t_n = reversal_time(n);
  const double s = n + 0.5;

  // <m|S_y|m+1> = (i/2) sqrt(s(s+1) - m(m+1)), basis index k <-> m = k - s - 1.
  Eigen::MatrixXcd sy = Eigen::MatrixXcd::Zero(dim, dim);
  for (int r = 0; r + 1 < dim; ++r) {
    const double m = (r + 1) - s - 1.0;
    const double amp = 0.5 * std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    sy(r, r + 1) = cd(0.0, amp);
    sy(r + 1, r) = cd(0.0, -amp);
  }
  const Eigen::MatrixXcd target = (-kPi / (2.0 * t_n)) * sy;
  // Equation-of-motion generator d gamma/dt = 2i G gamma, G = conj(A).
  const Eigen::MatrixXcd generator = a.dense().conjugate() / profile.duration;
  return (generator - target).cwiseAbs().maxCoeff();
}

double spin_y_check(int n) { return spin_y_deviation(protocol1_profile(n)); }

std::vector<double> numeric_eigenvalues(const CouplingMatrix& a) {
  a.validate();
  std::vector<double> diag(static_cast<std::size_t>(a.dim()), 0.0);
  return tridiagonal_eigenvalues(diag, a.offdiag);
}

SpectralDecomposition numeric_spectrum(const CouplingMatrix& a) {
  const TridiagonalEigensystem c = real_form(a);
  const int dim = a.dim();
  SpectralDecomposition out;
  out.eigenvalues = Eigen::Map<const Eigen::VectorXd>(c.values.data(), dim);
  out.eigenvectors.resize(dim, dim);
  // v = D^{-1} u, (D^{-1})_{jj} = i^{-j} with 1-based j.
  for (int j = 0; j < dim; ++j) {
    const cd phase = i_pow(-(j + 1));
    out.eigenvectors.row(j) = phase * c.vectors.row(j).cast<cd>();
  }
  return out;
}

std::vector<double> closed_form_spectrum(int n, int m, SignConvention convention) {
  ChainSpec{n, m}.validate();
  std::vector<double> e;
  e.reserve(2 * n + 2);
  for (int k = 1; k <= 2 * n + 2; ++k) {
    const int base = 2 * k - 2 * n - 3;
    const int s = convention == SignConvention::Corrected ? sgn(base) : sgn(-base);
    e.push_back(kPi / 4.0 * (base + 4.0 * s * m));
  }
  std::sort(e.begin(), e.end());
  return e;
}

SylvesterKac sylvester_kac(int n, double a) {
  require(n >= 1, "Sylvester-Kac order must be >= 1");
  require(a >= 0 && std::isfinite(a), "Sylvester-Kac shift must be finite and >= 0");
  require(n % 2 == 1 || a == 0.0, "even-order Sylvester-Kac matrices are only supported at a = 0");
  SylvesterKac out;
  out.matrix = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int j = 1; j <= n; ++j) {
    out.matrix(j - 1, j) = j % 2 ? j + a : j;
    const int r = n + 1 - j;
    out.matrix(j, j - 1) = r % 2 ? r + a : r;
  }
  out.matrix *= kPi / 4.0;
  if (n % 2 == 1) {
    for (int j = 0; j <= (n - 1) / 2; ++j) {
      const double lam = kPi / 4.0 * (2.0 * j + 1.0 + a);
      out.claimed_eigenvalues.push_back(lam);
      out.claimed_eigenvalues.push_back(-lam);
    }
  } else {
    for (int j = -n; j <= n; j += 2) out.claimed_eigenvalues.push_back(kPi / 4.0 * j);
  }
  std::sort(out.claimed_eigenvalues.begin(), out.claimed_eigenvalues.end());
  return out;
}

Eigen::MatrixXcd evolve_majorana(const CouplingMatrix& a, double t) {
  require(std::isfinite(t), "evolution time must be finite");
  const TridiagonalEigensystem c = real_form(a);
  const int dim = a.dim();
  const Eigen::MatrixXd& u = c.vectors;
  Eigen::VectorXd cosv(dim), sinv(dim);
  for (int k = 0; k < dim; ++k) {
    cosv[k] = std::cos(2.0 * c.values[k] * t);
    sinv[k] = std::sin(2.0 * c.values[k] * t);
  }
  // exp(-2iCt) = U cos U^T - i U sin U^T, then undo the diagonal similarity.
  const Eigen::MatrixXd re = (u * cosv.asDiagonal()) * u.transpose();
  const Eigen::MatrixXd im = (u * sinv.asDiagonal()) * u.transpose();
  Eigen::MatrixXcd g(dim, dim);
  for (int l = 0; l < dim; ++l) {
    for (int j = 0; j < dim; ++j) {
      g(j, l) = i_pow(l - j) * cd(re(j, l), -im(j, l));
    }
  }
  return g;
}

Eigen::MatrixXcd evolve_majorana(const SpectralDecomposition& spectrum, double t) {
  require(std::isfinite(t), "evolution time must be finite");
  const Eigen::VectorXcd phases =
      (spectrum.eigenvalues * (-2.0 * t)).unaryExpr([](double x) { return std::polar(1.0, x); });
  return spectrum.eigenvectors * phases.asDiagonal() * spectrum.eigenvectors.adjoint();
}

SignedPermutation extract_signed_permutation(const Eigen::MatrixXcd& m, double tol) {
  require(m.rows() == m.cols(), "signed permutation extraction needs a square matrix");
  require(tol > 0, "tolerance must be positive");
  const auto dim = static_cast<int>(m.rows());
  SignedPermutation p;
  p.perm.assign(dim, -1);
  p.sign.assign(dim, 1);
  std::vector<char> taken(dim, 0);

  double worst = 0.0;
  int worst_row = -1, worst_col = -1;
  auto note = [&](double dev, int r, int c) {
    if (dev > worst) {
      worst = dev;
      worst_row = r;
      worst_col = c;
    }
  };

  for (int r = 0; r < dim; ++r) {
    Eigen::Index col = 0;
    m.row(r).cwiseAbs().maxCoeff(&col);
    const cd lead = m(r, col);
    const int s = lead.real() >= 0 ? 1 : -1;
    note(std::abs(lead - cd(s, 0.0)), r, static_cast<int>(col));
    for (int c = 0; c < dim; ++c) {
      if (c != col) note(std::abs(m(r, c)), r, c);
    }
    if (taken[col]) note(1.0, r, static_cast<int>(col));
    taken[col] = 1;
    p.perm[r] = static_cast<int>(col);
    p.sign[r] = s;
  }
  if (worst > tol) {
    std::ostringstream os;
    os << "matrix is not a signed permutation: worst entry (" << worst_row << ", " << worst_col
       << ") = " << m(worst_row, worst_col) << ", deviation " << worst << " > tol " << tol;
    fail(ErrorCode::NotASignedPermutation, os.str());
  }
  return p;
}

SignedPermutation majorana_reversal_target(int n) {
  require(n >= 1, "chain length must be >= 1");
  const int size = 2 * n + 4;
  SignedPermutation p = SignedPermutation::identity(size);
  for (int k = 1; k <= 2 * n + 2; ++k) {
    p.perm[k] = 2 * n + 3 - k;
    p.sign[k] = (k - 1) % 2 == 0 ? 1 : -1;
  }
  return p;
}

SignedPermutation embed_bulk(const SignedPermutation& bulk) {
  SignedPermutation p = SignedPermutation::identity(bulk.size() + 2);
  for (int k = 0; k < bulk.size(); ++k) {
    p.perm[k + 1] = bulk.perm[k] + 1;
    p.sign[k + 1] = bulk.sign[k];
  }
  return p;
}

double reversal_deviation(const Eigen::MatrixXcd& propagator, int n) {
  require(propagator.rows() == 2 * n + 2 && propagator.cols() == 2 * n + 2,
          "propagator dimension must be 2N+2");
  const SignedPermutation target = majorana_reversal_target(n);
  double dev = 0.0;
  for (int j = 0; j < 2 * n + 2; ++j) {
    const int tcol = target.perm[j + 1] - 1;
    for (int l = 0; l < 2 * n + 2; ++l) {
      const double want = l == tcol ? target.sign[j + 1] : 0.0;
      dev = std::max(dev, std::abs(propagator(j, l) - want));
    }
  }
  return dev;
}

SignedPermutation braid(const SignedPermutation& p, int i, int j) {
  require(i >= 0 && j >= 0 && i < p.size() && j < p.size(), "braid index out of range");
  require(i != j, "braid needs two distinct indices");
  SignedPermutation out = p;
  for (int k = 0; k < out.size(); ++k) {
    if (p.perm[k] == i) {
      out.perm[k] = j;
    } else if (p.perm[k] == j) {
      out.perm[k] = i;
      out.sign[k] = -p.sign[k];
    }
  }
  return out;
}

SignedPermutation braid_pulse_sequence(int n) {
  require(n >= 1, "chain length must be >= 1");
  const int size = 2 * n + 4;
  // slot[s] = +-(k+1): Majorana k currently maps to +-gamma_s.
  std::vector<std::int32_t> slot(size);
  for (int s = 0; s < size; ++s) slot[s] = s + 1;
  std::int32_t* v = slot.data();
  auto braid_round = [v](int first, int last) {
    for (int i = first; i <= last; i += 2) {
      const std::int32_t lo = v[i];
      v[i] = -v[i + 1];
      v[i + 1] = lo;
    }
  };
  for (int round = 0; round <= n; ++round) {
    braid_round(1, 2 * n + 1);  // uniform Ising: pairs (2k+1, 2k+2)
    braid_round(2, 2 * n);      // uniform field: pairs (2k, 2k+1)
  }
  SignedPermutation p = SignedPermutation::identity(size);
  for (int s = 0; s < size; ++s) {
    const int k = std::abs(slot[s]) - 1;
    p.perm[k] = s;
    p.sign[k] = slot[s] > 0 ? 1 : -1;
  }
  return p;
}

double eigenvector_symmetry_check(const SpectralDecomposition& spectrum) {
  const auto dim = static_cast<int>(spectrum.eigenvalues.size());
  require(dim >= 2 && dim % 2 == 0, "spectrum dimension must be 2N+2");
  require(spectrum.eigenvectors.rows() == dim && spectrum.eigenvectors.cols() == dim,
          "eigenvector matrix has the wrong shape");
  const int n = dim / 2 - 1;
  const double scale = std::max(1.0, spectrum.eigenvalues.cwiseAbs().maxCoeff());
  for (int k = 0; k + 1 < dim; ++k) {
    if (spectrum.eigenvalues[k + 1] - spectrum.eigenvalues[k] < 1e-8 * scale) {
      fail(ErrorCode::Degenerate, "eigenvector symmetry needs a nondegenerate spectrum");
    }
  }
  double worst = 0.0;
  for (int k = 1; k <= dim; ++k) {
    const auto v = spectrum.eigenvectors.col(k - 1);
    Eigen::VectorXcd mirrored(dim);
    for (int j = 1; j <= dim; ++j) {
      const double parity = (n + k - j) % 2 == 0 ? 1.0 : -1.0;
      mirrored[j - 1] = cd(0.0, parity) * v[2 * n + 3 - j - 1];
    }
    const cd overlap = mirrored.dot(v);
    const cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd(1.0, 0.0);
    worst = std::max(worst, (v - phase * mirrored).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace spinrev

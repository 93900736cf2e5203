#include "spinrev/statevec.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "spinrev/error.hpp"
#include "spinrev/majorana.hpp"

namespace spinrev {

namespace {

using cd = std::complex<double>;
using Index = Eigen::Index;

void check_sites(int sites, int cap, const char* what) {
  require(sites >= 1, std::string(what) + ": need at least one site");
  if (sites > cap) {
    fail(ErrorCode::Resource, std::string(what) + ": " + std::to_string(sites) +
                                  " sites exceeds the dense limit of " + std::to_string(cap));
  }
}

std::uint64_t site_bit(int sites, int position) {
  return std::uint64_t{1} << (sites - 1 - position);
}

// Adds c * (Pauli string given by masks) to h.
void add_term(DenseOperator& h, int sites, std::uint64_t xmask, std::uint64_t zmask, double c) {
  const std::uint64_t dim = std::uint64_t{1} << sites;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double s = (std::popcount(col & zmask) & 1) ? -c : c;
    h(static_cast<Index>(col ^ xmask), static_cast<Index>(col)) += s;
  }
}

double max_abs(const DenseOperator& m) { return m.cwiseAbs().maxCoeff(); }

void check_hermitian(const DenseOperator& h) {
  require(h.rows() == h.cols(), "operator is not square");
  const double scale = std::max(1.0, max_abs(h));
  require(max_abs(h - h.adjoint()) <= 1e-12 * scale, "operator is not Hermitian");
}

double quarter_turn_residual(cd z, int& q) {
  const double angle = std::arg(z);
  q = static_cast<int>(std::lround(angle / (std::numbers::pi / 2)));
  q = ((q % 4) + 4) % 4;
  return std::abs(z - std::polar(1.0, q * std::numbers::pi / 2));
}

}  // namespace

int site_count(const DenseOperator& op) {
  const auto dim = static_cast<std::uint64_t>(op.rows());
  require(op.rows() == op.cols() && dim >= 2 && std::has_single_bit(dim),
          "operator dimension is not a power of two");
  return std::countr_zero(dim);
}

DenseOperator pauli_to_dense(const PauliString& p) {
  check_sites(p.sites(), kMaxDenseSites, "pauli_to_dense");
  const int n = p.sites();
  const Index dim = Index{1} << n;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  // letters = i^{#Y} X^x Z^z
  const cd base = p.phase() * PauliString(std::vector<Pauli>{}, p.y_count()).phase();
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    const bool odd = std::popcount(col & z) & 1;
    out(static_cast<Index>(col ^ x), static_cast<Index>(col)) = odd ? -base : base;
  }
  return out;
}

DenseOperator build_hamiltonian(const StaticProfile& profile, bool extended) {
  profile.validate();
  require(profile.protocol != Protocol::Pulsed,
          "the pulsed protocol has no single Hamiltonian; use pulse_sequence_unitary");
  const int n = profile.n;
  if (extended) {
    check_sites(n, kMaxExtendedBulk, "extended Hamiltonian");
  } else {
    check_sites(n, kMaxPlainSites, "Hamiltonian");
  }
  const int sites = extended ? n + 2 : n;
  const int offset = extended ? 0 : -1;  // position of site k is k + offset
  const Index dim = Index{1} << sites;
  DenseOperator h = DenseOperator::Zero(dim, dim);

  for (int k = 0; k <= n; ++k) {
    std::uint64_t x = 0;
    if (extended || k >= 1) x |= site_bit(sites, k + offset);
    if (extended || k + 1 <= n) x |= site_bit(sites, k + 1 + offset);
    add_term(h, sites, x, 0, profile.J[static_cast<std::size_t>(k)]);
  }
  for (int k = 1; k <= n; ++k) {
    add_term(h, sites, 0, site_bit(sites, k + offset), -profile.field(k));
  }
  return h;
}

DenseOperator exponentiate(const DenseOperator& h, double t) {
  check_hermitian(h);
  const Index dim = h.rows();
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real());
    if (es.info() != Eigen::Success) fail(ErrorCode::Convergence, "Hermitian eigensolver failed");
    const Eigen::MatrixXd& v = es.eigenvectors();
    const Eigen::ArrayXd phase = es.eigenvalues().array() * t;
    const Eigen::MatrixXd c = v * phase.cos().matrix().asDiagonal() * v.transpose();
    const Eigen::MatrixXd s = v * phase.sin().matrix().asDiagonal() * v.transpose();
    DenseOperator u(dim, dim);
    u.real() = c;
    u.imag() = -s;
    return u;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) fail(ErrorCode::Convergence, "Hermitian eigensolver failed");
  const Eigen::VectorXcd d =
      (es.eigenvalues().array() * t).unaryExpr([](double a) { return std::polar(1.0, -a); });
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

DenseOperator reversal_unitary(int n) {
  check_sites(n, kMaxPlainSites, "reversal_unitary");
  const Index dim = Index{1} << n;
  DenseOperator r = DenseOperator::Zero(dim, dim);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    std::uint64_t row = 0;
    for (int b = 0; b < n; ++b) {
      if (col >> b & 1) row |= std::uint64_t{1} << (n - 1 - b);
    }
    r(static_cast<Index>(row), static_cast<Index>(col)) = 1.0;
  }
  return r;
}

PhaseDistance phase_distance(const DenseOperator& u, const DenseOperator& v) {
  require(u.rows() == v.rows() && u.cols() == v.cols(), "phase_distance: dimension mismatch");
  const cd tr = (v.adjoint() * u).trace();
  if (std::abs(tr) >= 1e-8) {
    const cd align = tr / std::abs(tr);
    return {max_abs(u - align * v), false};
  }
  PhaseDistance best{std::numeric_limits<double>::infinity(), true};
  constexpr int kGrid = 1024;
  for (int g = 0; g < kGrid; ++g) {
    const cd align = std::polar(1.0, 2 * std::numbers::pi * g / kGrid);
    best.distance = std::min(best.distance, max_abs(u - align * v));
  }
  return best;
}

DenseOperator uniform_ising_hamiltonian(int n) {
  check_sites(n, kMaxPlainSites, "uniform Ising Hamiltonian");
  const Index dim = Index{1} << n;
  DenseOperator h = DenseOperator::Zero(dim, dim);
  add_term(h, n, site_bit(n, 0), 0, 1.0);
  for (int k = 0; k + 1 < n; ++k) add_term(h, n, site_bit(n, k) | site_bit(n, k + 1), 0, 1.0);
  add_term(h, n, site_bit(n, n - 1), 0, 1.0);
  return h;
}

DenseOperator uniform_field_hamiltonian(int n) {
  check_sites(n, kMaxPlainSites, "uniform field Hamiltonian");
  const Index dim = Index{1} << n;
  DenseOperator h = DenseOperator::Zero(dim, dim);
  for (int k = 0; k < n; ++k) add_term(h, n, 0, site_bit(n, k), 1.0);
  return h;
}

DenseOperator pulse_sequence_unitary(int n) {
  check_sites(n, kMaxExtendedBulk, "pulse_sequence_unitary");
  const double quarter = std::numbers::pi / 4;
  const DenseOperator ising = exponentiate(uniform_ising_hamiltonian(n), -quarter);
  const DenseOperator field = exponentiate(uniform_field_hamiltonian(n), -quarter);
  const DenseOperator round = field * ising;
  DenseOperator u = DenseOperator::Identity(round.rows(), round.cols());
  for (int r = 0; r <= n; ++r) u = round * u;
  return u;
}

PauliString parity_string(int n, int a, int b) {
  require(n >= 1, "parity_string: N must be positive");
  require(0 <= a && a <= b && b <= n + 1, "parity_string: need 0 <= a <= b <= N+1");
  std::vector<Pauli> letters(static_cast<std::size_t>(n + 2), Pauli::I);
  for (int j = a; j <= b; ++j) letters[static_cast<std::size_t>(j)] = Pauli::Z;
  return PauliString(std::move(letters), 2 * (b - a + 1));
}

PauliString jordan_wigner_majorana(int n, int idx) {
  require(n >= 1, "jordan_wigner_majorana: N must be positive");
  require(0 <= idx && idx <= 2 * n + 3, "jordan_wigner_majorana: index out of range");
  const int k = idx / 2;
  const PauliString local = PauliString::single(n + 2, k, idx % 2 ? Pauli::Y : Pauli::X);
  return k == 0 ? local : parity_string(n, 0, k - 1) * local;
}

PauliString heisenberg_image(const DenseOperator& u, const PauliString& p, double tol) {
  const int n = site_count(u);
  require(p.sites() == n, "heisenberg_image: site count mismatch");
  require(tol > 0, "heisenberg_image: tol must be positive");
  check_sites(n, kMaxDenseSites, "heisenberg_image");
  const Index dim = u.rows();

  // p is monomial: row r of p*U is val(r^x) * U.row(r^x).
  const std::uint64_t px = p.x_mask();
  const std::uint64_t pz = p.z_mask();
  const cd base = p.phase() * PauliString(std::vector<Pauli>{}, p.y_count()).phase();
  DenseOperator pu(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const std::uint64_t src = static_cast<std::uint64_t>(r) ^ px;
    const cd val = (std::popcount(src & pz) & 1) ? -base : base;
    pu.row(r) = val * u.row(static_cast<Index>(src));
  }
  const DenseOperator m = u.adjoint() * pu;

  // c(x,z) = 2^-n sum_r (-1)^{z.r} M[r^x][r], by a Walsh-Hadamard transform per x.
  std::vector<cd> f(static_cast<std::size_t>(dim));
  double best = -1.0, second = 0.0;
  cd best_c{};
  std::uint64_t best_x = 0, best_z = 0;
  for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(dim); ++x) {
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(dim); ++r) {
      f[r] = m(static_cast<Index>(r ^ x), static_cast<Index>(r));
    }
    for (std::size_t len = 1; len < f.size(); len <<= 1) {
      for (std::size_t i = 0; i < f.size(); i += 2 * len) {
        for (std::size_t j = i; j < i + len; ++j) {
          const cd a = f[j], b = f[j + len];
          f[j] = a + b;
          f[j + len] = a - b;
        }
      }
    }
    for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(dim); ++z) {
      const cd c = f[z] / static_cast<double>(dim);
      const double a = std::abs(c);
      if (a > best) {
        second = std::max(second, best);
        best = a;
        best_c = c;
        best_x = x;
        best_z = z;
      } else {
        second = std::max(second, a);
      }
    }
  }

  std::vector<Pauli> letters(static_cast<std::size_t>(n));
  int ys = 0;
  for (int pos = 0; pos < n; ++pos) {
    const bool bx = best_x & site_bit(n, pos);
    const bool bz = best_z & site_bit(n, pos);
    letters[static_cast<std::size_t>(pos)] =
        bx ? (bz ? Pauli::Y : Pauli::X) : (bz ? Pauli::Z : Pauli::I);
    ys += bx && bz;
  }
  // X^x Z^z = (-i)^{#Y} * letters
  const cd phase = best_c * PauliString(std::vector<Pauli>{}, -ys).phase();
  int q = 0;
  const double residual = quarter_turn_residual(phase, q);
  if (std::abs(best - 1.0) > tol || second > tol || residual > tol) {
    fail(ErrorCode::NotAPauliString,
         "conjugated operator is not a single Pauli string (leading |c| = " +
             std::to_string(best) + ", next |c| = " + std::to_string(second) + ")");
  }
  return PauliString(std::move(letters), q);
}

DenseOperator extended_evolution(const StaticProfile& profile) {
  return exponentiate(build_hamiltonian(profile, true), profile.duration);
}

ParityStringCheck parity_string_check(const StaticProfile& profile, int k) {
  const int n = profile.n;
  require(0 <= k && k <= n, "parity_string_check: need 0 <= k <= N");
  check_sites(n, 8, "parity_string_check");
  const DenseOperator u = extended_evolution(profile);
  const DenseOperator ud = u.adjoint();

  ParityStringCheck out;
  const PauliString edges = PauliString::single(n + 2, 0, Pauli::X) *
                            PauliString::single(n + 2, n + 1, Pauli::X);
  const PauliString want = (edges * parity_string(n, 0, n - k)).times_phase(1);
  out.parity_distance =
      max_abs(ud * pauli_to_dense(parity_string(n, 0, k)) * u - pauli_to_dense(want));

  const SignedPermutation target = majorana_reversal_target(n);
  for (int j = 0; j < target.size(); ++j) {
    const auto sj = static_cast<std::size_t>(j);
    const DenseOperator image = ud * pauli_to_dense(jordan_wigner_majorana(n, j)) * u;
    const DenseOperator expect =
        static_cast<double>(target.sign[sj]) *
        pauli_to_dense(jordan_wigner_majorana(n, target.perm[sj]));
    out.majorana_distance = std::max(out.majorana_distance, max_abs(image - expect));
  }
  return out;
}

ParityStringCheck parity_string_check(int n, int k) {
  return parity_string_check(protocol1_profile(n), k);
}

DenseOperator edge_projected(const DenseOperator& u_ext, EdgeState edges) {
  const int sites = site_count(u_ext);
  require(sites >= 3, "edge_projected: need an extended chain");
  const int n = sites - 2;
  const Index bulk = Index{1} << n;
  const double e1 = edges == EdgeState::PlusPlus ? 1.0 : -1.0;
  // <e| = (<0| + e1 <1|)/sqrt2 on both edges; four index combinations per side.
  auto index = [&](int left, Index mid, int right) {
    return (static_cast<Index>(left) << (n + 1)) | (mid << 1) | right;
  };
  DenseOperator out = DenseOperator::Zero(bulk, bulk);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          const double w = (a ? e1 : 1.0) * (b ? e1 : 1.0) * (c ? e1 : 1.0) * (d ? e1 : 1.0) / 4;
          for (Index r = 0; r < bulk; ++r) {
            for (Index col = 0; col < bulk; ++col) {
              out(r, col) += w * u_ext(index(a, r, b), index(c, col, d));
            }
          }
        }
      }
    }
  }
  return out;
}

double edge_commutator(const DenseOperator& u_ext) {
  const int sites = site_count(u_ext);
  require(sites >= 3, "edge_commutator: need an extended chain");
  double worst = 0.0;
  for (int pos : {0, sites - 1}) {
    const DenseOperator x = pauli_to_dense(PauliString::single(sites, pos, Pauli::X));
    worst = std::max(worst, max_abs(u_ext * x - x * u_ext));
  }
  return worst;
}

}  // namespace spinrev

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinrev/error.hpp"
#include "spinrev/majorana.hpp"
#include "spinrev/statevec.hpp"
#include "support.hpp"

using namespace spinrev;
using spinrev_test::embed;
using spinrev_test::max_abs;
using spinrev_test::pauli_x;
using spinrev_test::pauli_z;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Hamiltonian assembled term by term from Kronecker products.
DenseOperator kron_hamiltonian(const StaticProfile& p) {
  const int n = p.n;
  DenseOperator h = p.J[0] * embed(pauli_x(), 0, n) + p.J[n] * embed(pauli_x(), n - 1, n);
  for (int k = 1; k < n; ++k) h += p.J[k] * embed(pauli_x(), k - 1, n) * embed(pauli_x(), k, n);
  for (int k = 1; k <= n; ++k) h -= p.field(k) * embed(pauli_z(), k - 1, n);
  return h;
}

DenseOperator identity(int sites) {
  return DenseOperator::Identity(Eigen::Index{1} << sites, Eigen::Index{1} << sites);
}

}  // namespace

TEST_CASE("single-site Hamiltonian") {
  const DenseOperator h = build_hamiltonian(protocol1_profile(1), false);
  const DenseOperator want = 2.0 * pauli_x() - (2 / std::sqrt(3.0)) * pauli_z();
  CHECK(max_abs(h - want) < 1e-15);
}

TEST_CASE("Hamiltonian matches the Kronecker construction") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = spinrev_test::uniform_int(1, 7);
    StaticProfile p = protocol1_profile(n);
    for (double& j : p.J) j = spinrev_test::uniform_real(-2, 2);
    for (double& f : p.h) f = spinrev_test::uniform_real(-2, 2);
    const DenseOperator h = build_hamiltonian(p, false);
    CHECK(max_abs(h - kron_hamiltonian(p)) < 1e-14);
    CHECK(max_abs(h - h.adjoint()) == 0.0);
  }
  CHECK_THROWS_AS(build_hamiltonian(protocol1_profile(13), false), Error);
  CHECK_THROWS_AS(build_hamiltonian(protocol1_profile(11), true), Error);
  CHECK_THROWS_AS(build_hamiltonian(protocol2_profile(3), false), Error);
}

TEST_CASE("extended Hamiltonian commutes with the edge X operators") {
  for (int n = 1; n <= 5; ++n) {
    const DenseOperator h = build_hamiltonian(protocol1_profile(n), true);
    CHECK(site_count(h) == n + 2);
    for (int pos : {0, n + 1}) {
      const DenseOperator x = embed(pauli_x(), pos, n + 2);
      CHECK(max_abs(h * x - x * h) < 1e-14);
    }
  }
}

TEST_CASE("exponentiate") {
  const DenseOperator h = build_hamiltonian(protocol1_profile(3), false);
  CHECK(max_abs(exponentiate(h, 0.0) - identity(3)) < 1e-14);
  const DenseOperator u = exponentiate(h, 0.7);
  CHECK(max_abs(u * u.adjoint() - identity(3)) < 1e-12);
  CHECK(max_abs(u * exponentiate(h, -0.7) - identity(3)) < 1e-12);

  SUBCASE("single site at the reversal time is -I") {
    const StaticProfile p = protocol1_profile(1);
    CHECK(max_abs(exponentiate(build_hamiltonian(p, false), p.duration) + identity(1)) < 1e-14);
  }
  SUBCASE("complex Hermitian input") {
    const DenseOperator y = spinrev_test::pauli_y();
    const double t = 0.3;
    const DenseOperator want = std::cos(t) * identity(1) - cd(0, std::sin(t)) * y;
    CHECK(max_abs(exponentiate(y, t) - want) < 1e-14);
  }
  SUBCASE("non-Hermitian input is rejected") {
    DenseOperator bad = identity(1);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(exponentiate(bad, 1.0), Error);
  }
}

TEST_CASE("reversal unitary") {
  CHECK(max_abs(reversal_unitary(1) - identity(1)) == 0.0);
  DenseOperator swap = DenseOperator::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  CHECK(max_abs(reversal_unitary(2) - swap) == 0.0);
  const DenseOperator r3 = reversal_unitary(3);
  CHECK(max_abs(r3 * r3 - identity(3)) == 0.0);
  CHECK(r3(0b011, 0b110) == cd(1, 0));
  CHECK(r3(0b010, 0b010) == cd(1, 0));
}

TEST_CASE("phase distance") {
  const DenseOperator u = exponentiate(build_hamiltonian(protocol1_profile(2), false), 0.4);
  CHECK(phase_distance(u, u).distance < 1e-15);
  CHECK(phase_distance(-identity(2), identity(2)).distance < 1e-15);
  CHECK(phase_distance(cd(0, 1) * u, u).distance < 1e-15);
  const PhaseDistance zero_trace = phase_distance(pauli_x(), identity(1));
  CHECK(zero_trace.ambiguous);
  CHECK(zero_trace.distance == doctest::Approx(1.0));
  CHECK_THROWS_AS(phase_distance(identity(1), identity(2)), Error);
}

TEST_CASE("static evolution reverses the chain") {
  for (int n = 1; n <= 6; ++n) {
    const StaticProfile p = protocol1_profile(n);
    const DenseOperator u = exponentiate(build_hamiltonian(p, false), p.duration);
    CHECK(phase_distance(u, reversal_unitary(n)).distance < 1e-10);
  }
}

TEST_CASE("pulse sequence") {
  CHECK(phase_distance(pulse_sequence_unitary(2), reversal_unitary(2)).distance < 1e-10);
  const DenseOperator u = pulse_sequence_unitary(5);
  CHECK(max_abs(u * u.adjoint() - identity(5)) < 1e-12);
  CHECK(phase_distance(u, reversal_unitary(5)).distance < 1e-10);
  CHECK_THROWS_AS(pulse_sequence_unitary(11), Error);
}

TEST_CASE("Jordan-Wigner Majoranas") {
  CHECK(jordan_wigner_majorana(2, 0) == PauliString::parse("XIII"));
  CHECK(jordan_wigner_majorana(2, 1) == PauliString::parse("YIII"));
  CHECK(jordan_wigner_majorana(2, 2) == PauliString::parse("-ZXII"));
  CHECK(jordan_wigner_majorana(2, 7) == PauliString::parse("-ZZZY"));
  CHECK_THROWS_AS(jordan_wigner_majorana(2, 8), Error);
  CHECK_THROWS_AS(jordan_wigner_majorana(2, -1), Error);

  SUBCASE("anticommutation") {
    for (int n = 1; n <= 5; ++n) {
      std::vector<DenseOperator> g;
      for (int j = 0; j < 2 * n + 4; ++j) g.push_back(pauli_to_dense(jordan_wigner_majorana(n, j)));
      const DenseOperator id = identity(n + 2);
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
          const DenseOperator want = a == b ? DenseOperator(2.0 * id) : DenseOperator(0.0 * id);
          CHECK(max_abs(g[a] * g[b] + g[b] * g[a] - want) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("parity strings") {
  CHECK(parity_string(3, 0, 0) == PauliString::parse("-ZIIII"));
  CHECK(parity_string(3, 1, 2) == PauliString::parse("IZZII"));
  for (int n = 1; n <= 5; ++n) {
    for (int a = 0; a <= n + 1; ++a) {
      for (int b = a; b <= n + 1; ++b) {
        const PauliString p = parity_string(n, a, b);
        CHECK(p * p == PauliString(n + 2));
      }
    }
    for (int k = 0; k <= n + 1; ++k) {
      PauliString prod(n + 2);
      for (int j = 0; j <= 2 * k + 1; ++j) prod *= jordan_wigner_majorana(n, j);
      CHECK(parity_string(n, 0, k) == prod.times_phase(k + 1));
    }
  }
  CHECK_THROWS_AS(parity_string(3, 2, 1), Error);
  CHECK_THROWS_AS(parity_string(3, 0, 5), Error);
}

TEST_CASE("Heisenberg images of bulk Paulis") {
  const StaticProfile p3 = protocol1_profile(3);
  const DenseOperator u3 = exponentiate(build_hamiltonian(p3, false), p3.duration);
  CHECK(heisenberg_image(u3, PauliString::parse("IXI"), 1e-10) == PauliString::parse("IXI"));
  CHECK(heisenberg_image(u3, PauliString::parse("XII"), 1e-10) == PauliString::parse("IIX"));

  const StaticProfile p4 = protocol1_profile(4);
  const DenseOperator u4 = exponentiate(build_hamiltonian(p4, false), p4.duration);
  CHECK(heisenberg_image(u4, PauliString::parse("ZIII"), 1e-10) == PauliString::parse("IIIZ"));
  CHECK(heisenberg_image(u4, PauliString::parse("XYZI"), 1e-10) == PauliString::parse("IZYX"));

  SUBCASE("phases are tracked") {
    const DenseOperator s = pauli_to_dense(PauliString::parse("X"));
    CHECK(heisenberg_image(s, PauliString::parse("iZ"), 1e-10) == PauliString::parse("-iZ"));
    CHECK(heisenberg_image(s, PauliString::parse("Y"), 1e-10) == PauliString::parse("-Y"));
  }
  SUBCASE("half time is not Clifford") {
    const DenseOperator half = exponentiate(build_hamiltonian(p3, false), p3.duration / 2);
    CHECK_THROWS_AS(heisenberg_image(half, PauliString::parse("XII"), 1e-10), Error);
    try {
      heisenberg_image(half, PauliString::parse("XII"), 1e-10);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAPauliString);
    }
  }
}

TEST_CASE("parity string action on the extended chain") {
  const ParityStringCheck a = parity_string_check(2, 0);
  CHECK(a.parity_distance < 1e-10);
  CHECK(a.majorana_distance < 1e-10);
  const ParityStringCheck b = parity_string_check(3, 1);
  CHECK(b.parity_distance < 1e-10);
  CHECK(b.majorana_distance < 1e-10);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(parity_string_check(n, k).parity_distance < 1e-10);
  }
  CHECK(parity_string_check(protocol3_profile(4, 1), 2).parity_distance < 1e-10);

  const DenseOperator u = extended_evolution(protocol1_profile(3));
  CHECK(heisenberg_image(u, jordan_wigner_majorana(3, 0), 1e-10) == jordan_wigner_majorana(3, 0));
  CHECK_THROWS_AS(parity_string_check(9, 0), Error);
}

TEST_CASE("edge sectors") {
  for (int n = 1; n <= 4; ++n) {
    const StaticProfile p = protocol1_profile(n);
    const DenseOperator ext = extended_evolution(p);
    CHECK(edge_commutator(ext) < 1e-12);

    const DenseOperator plain = exponentiate(build_hamiltonian(p, false), p.duration);
    CHECK(max_abs(edge_projected(ext, EdgeState::PlusPlus) - plain) < 1e-10);

    // |--> on the edges flips the sign of the single-site X terms.
    StaticProfile flipped = p;
    flipped.J.front() = -flipped.J.front();
    flipped.J.back() = -flipped.J.back();
    const DenseOperator minus = edge_projected(ext, EdgeState::MinusMinus);
    CHECK(max_abs(minus - exponentiate(build_hamiltonian(flipped, false), p.duration)) < 1e-10);
    CHECK(phase_distance(minus, reversal_unitary(n)).distance < 1e-10);
  }
}

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "chsh/error.hpp"
#include "chsh/spin.hpp"
#include "oracles.hpp"

using namespace chsh;
using namespace chsh::spin;

namespace {

AngleSet random_angles(std::mt19937_64& rng) {
  return {oracle::random_angle(rng), oracle::random_angle(rng), oracle::random_angle(rng),
          oracle::random_angle(rng)};
}

}  // namespace

TEST_CASE("index mapping") {
  CHECK(local_dim(Spin::half) == 2);
  CHECK(local_dim(Spin::one) == 3);
  CHECK(index_of(Spin::one, 1) == 0);
  CHECK(index_of(Spin::one, 0) == 1);
  CHECK(index_of(Spin::one, -1) == 2);
  CHECK(index_of(Spin::half, 1) == 0);
  CHECK(index_of(Spin::half, -1) == 1);
  CHECK_THROWS_AS(index_of(Spin::one, 2), DomainError);
  CHECK_THROWS_AS(index_of(Spin::half, 0), DomainError);
}

TEST_CASE("singlet amplitudes") {
  SUBCASE("spin-1") {
    const Ket k = singlet(Spin::one).ket;
    REQUIRE(k.dim() == 9);
    CHECK(k.is_normalized());
    const double s = 1.0 / std::sqrt(3.0);
    // |1,-1⟩ - |0,0⟩ + |-1,1⟩, all over √3
    CHECK(std::abs(k[0 * 3 + 2] - Complex(s)) <= 1e-15);
    CHECK(std::abs(k[1 * 3 + 1] - Complex(-s)) <= 1e-15);
    CHECK(std::abs(k[2 * 3 + 0] - Complex(s)) <= 1e-15);
    double rest = 0.0;
    for (std::size_t i : {0u, 1u, 3u, 5u, 7u, 8u}) rest += std::abs(k[i]);
    CHECK(rest == 0.0);
  }
  SUBCASE("spin-1/2") {
    const Ket k = singlet(Spin::half).ket;
    REQUIRE(k.dim() == 4);
    CHECK(k.is_normalized());
    CHECK(std::abs(k[1] - Complex(std::numbers::sqrt2 / 2.0)) <= 1e-15);
    CHECK(std::abs(k[2] + Complex(std::numbers::sqrt2 / 2.0)) <= 1e-15);
    CHECK(k[0] == Complex(0.0));
    CHECK(k[3] == Complex(0.0));
  }
}

TEST_CASE("spin matrices and the singlet energy") {
  const SpinMatrices s = spin_matrices(Spin::one);
  // [Sx, Sy] = i Sz
  CHECK(max_abs_diff(commutator(s.x, s.y), Complex(0.0, 1.0) * s.z) <= 1e-14);
  CHECK(max_abs_diff(commutator(s.y, s.z), Complex(0.0, 1.0) * s.x) <= 1e-14);
  const DenseOperator s2 = s.x * s.x + s.y * s.y + s.z * s.z;
  CHECK(max_abs_diff(s2, Complex(2.0) * DenseOperator::identity(3)) <= 1e-14);

  const DenseOperator h = spin_hamiltonian();
  CHECK(h.is_hermitian());
  CHECK(std::abs(h.trace()) <= 1e-14);
  const Ket psi = singlet(Spin::one).ket;
  const Ket hpsi = h * psi;
  for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(hpsi[i] + 2.0 * psi[i]) <= 1e-14);

  for (Spin sp : {Spin::half, Spin::one}) {
    const Ket v = total_spin_squared(sp) * singlet(sp).ket;
    CHECK(v.norm() <= 1e-14);
  }
}

TEST_CASE("local flip matrix elements") {
  const double phi = 0.83;
  const Complex e = std::polar(1.0, phi);
  const DenseOperator a = local_flip(Spin::one, Side::A, phi);
  // ⟨0|A|−1⟩ = e^{iφ}, |1⟩ is fixed.
  CHECK(std::abs(a(index_of(Spin::one, 0), index_of(Spin::one, -1)) - e) <= 1e-15);
  CHECK(std::abs(a(index_of(Spin::one, -1), index_of(Spin::one, 0)) - std::conj(e)) <= 1e-15);
  CHECK(a(0, 0) == Complex(1.0));
  const DenseOperator b = local_flip(Spin::one, Side::B, phi);
  CHECK(std::abs(b(index_of(Spin::one, 0), index_of(Spin::one, 1)) - e) <= 1e-15);
  CHECK(b(2, 2) == Complex(1.0));

  for (Spin sp : {Spin::half, Spin::one}) {
    for (Side sd : {Side::A, Side::B}) {
      const DenseOperator f = local_flip(sp, sd, phi);
      CHECK(f.is_hermitian());
      CHECK(max_abs_diff(f * f, DenseOperator::identity(f.dim())) <= 1e-15);
    }
  }
  // Phase zero on spin-1/2 is Pauli-X.
  const DenseOperator x = local_flip(Spin::half, Side::A, 0.0);
  CHECK(x(0, 1) == Complex(1.0));
  CHECK(x(1, 0) == Complex(1.0));
  CHECK(x(0, 0) == Complex(0.0));
  CHECK(max_abs_diff(flip_operator(Spin::one, Side::B, phi),
                     oracle::naive_kron(DenseOperator::identity(3), b)) == 0.0);
}

TEST_CASE("spin-1 closed form matches the 9x9 matrix computation") {
  std::mt19937_64 rng(31);
  const Ket psi = singlet(Spin::one).ket;
  for (int trial = 0; trial < 100; ++trial) {
    const AngleSet a = random_angles(rng);
    const ChshQuadruple q = quadruple(Spin::one, a);
    CHECK(std::abs(chsh_value(psi, q) - spin_one_chsh_closed(a)) <= 1e-12);
    // Independent route through the full operator.
    CHECK(std::abs(oracle::naive_expectation(psi, chsh_operator(q)).real() -
                   spin_one_chsh_closed(a)) <= 1e-12);
  }
}

TEST_CASE("spin-1 closed-form values") {
  CHECK(std::abs(spin_one_chsh_closed(AngleSet(0, 0, 0, 0)) + 2.0 / 3.0) <= 1e-15);
  CHECK(std::abs(spin_one_chsh_closed(spin_one_demo_angles()) - 2.27614237491539669920) <=
        1e-12);
  const ClosedFormCorrelator cf = spin_one_closed_form();
  CHECK(cf.prefactor == doctest::Approx(2.0 / 3.0));
  CHECK(cf.constant == 1.0);
}

TEST_CASE("spin-1/2 pair correlator") {
  std::mt19937_64 rng(32);
  const Ket psi = singlet(Spin::half).ket;
  for (int trial = 0; trial < 50; ++trial) {
    const double alpha = oracle::random_angle(rng);
    const double beta = oracle::random_angle(rng);
    const DenseOperator ab =
        flip_operator(Spin::half, Side::A, alpha) * flip_operator(Spin::half, Side::B, beta);
    const double matrix = oracle::naive_expectation(psi, ab).real();
    CHECK(std::abs(matrix - spin_half_pair_correlator(alpha, beta)) <= 1e-12);
    CHECK(std::abs(matrix + std::cos(alpha - beta)) <= 1e-12);
  }
  const double v = chsh_value(psi, quadruple(Spin::half, tsirelson_angles()));
  CHECK(std::abs(std::abs(v) - oracle::kTsirelson) <= 1e-12);
}

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "chsh/error.hpp"
#include "chsh/fock.hpp"
#include "oracles.hpp"

using namespace chsh;
using namespace chsh::fock;

namespace {

bool interior(const FockSpace& s, std::size_t i, std::size_t margin) {
  return i / s.cutoff() + margin < s.cutoff() && i % s.cutoff() + margin < s.cutoff();
}

/// Largest |M(r,c) - R(r,c)| over basis states away from the truncation edge.
double interior_diff(const FockSpace& s, const DenseOperator& m, const DenseOperator& r,
                     std::size_t margin) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!interior(s, i, margin)) continue;
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (!interior(s, j, margin)) continue;
      worst = std::max(worst, std::abs(m(i, j) - r(i, j)));
    }
  }
  return worst;
}

AngleSet random_angles(std::mt19937_64& rng) {
  return {oracle::random_angle(rng), oracle::random_angle(rng), oracle::random_angle(rng),
          oracle::random_angle(rng)};
}

}  // namespace

TEST_CASE("FockSpace accepts only even cutoffs of at least 4") {
  CHECK_THROWS_AS(FockSpace(5), DomainError);
  CHECK_THROWS_AS(FockSpace(2), DomainError);
  CHECK_THROWS_AS(FockSpace(0), DomainError);
  const FockSpace s(6);
  CHECK(s.dim() == 36);
  CHECK(s.index(2, 3) == 15);
  CHECK(FockSpace().cutoff() == 40);
}

TEST_CASE("ladder operators") {
  const FockSpace s(8);
  const LadderMatrices l = ladder_matrices(s);
  const Ket vac = Ket::basis(s.dim(), s.index(0, 0));
  CHECK((l.a * vac).norm() == 0.0);
  CHECK((l.b * vac).norm() == 0.0);
  CHECK(l.a_dag(s.index(1, 0), s.index(0, 0)) == Complex(1.0));
  CHECK(l.b_dag(s.index(0, 1), s.index(0, 0)) == Complex(1.0));
  CHECK(max_abs_diff(commutator(l.a, l.b_dag), DenseOperator(s.dim())) == 0.0);
  CHECK(max_abs_diff(commutator(l.a, l.b), DenseOperator(s.dim())) == 0.0);

  // [a, a†] is the identity except at the top level, where it is 1 - N.
  const DenseOperator c = commutator(l.a, l.a_dag);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const double expected = i / s.cutoff() == s.cutoff() - 1 ? 1.0 - 8.0 : 1.0;
    CHECK(std::abs(c(i, i) - Complex(expected)) <= 1e-13);
  }
}

TEST_CASE("squeezed state") {
  const FockSpace s(40);
  SUBCASE("coefficients and truncated norm") {
    const SqueezedState st = squeezed_state(0.5, s);
    CHECK(st.ket.is_normalized());
    const double raw = std::abs(st.ket[s.index(2, 2)]) * std::sqrt(st.truncated_norm_sq);
    CHECK(std::abs(raw - 0.216506350946109661691) <= 1e-15);
    for (double eta : {0.1, 0.5, 0.9, 0.99}) {
      CHECK(std::abs(squeezed_state(eta, s).truncated_norm_sq - (1.0 - std::pow(eta, 80))) <=
            1e-14);
    }
    CHECK(std::abs(st.ket[s.index(2, 3)]) == 0.0);
  }
  SUBCASE("matches the exponential construction") {
    // |η⟩ ∝ exp(η a†b†)|0⟩, summed term by term with plain matrix-vector products.
    const FockSpace small(12);
    const LadderMatrices l = ladder_matrices(small);
    const DenseOperator pair = oracle::naive_product(l.a_dag, l.b_dag);
    const double eta = 0.63;
    std::vector<Complex> term(small.dim()), total(small.dim());
    term[0] = 1.0;
    for (std::size_t n = 0; n < small.cutoff(); ++n) {
      for (std::size_t i = 0; i < small.dim(); ++i) total[i] += term[i];
      term = oracle::naive_apply(pair, Ket(term));
      for (Complex& z : term) z *= eta / static_cast<double>(n + 1);
    }
    const Ket expected = Ket(total).normalized();
    const Ket got = squeezed_state(eta, small).ket;
    for (std::size_t i = 0; i < small.dim(); ++i) CHECK(std::abs(got[i] - expected[i]) <= 1e-14);
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(squeezed_state(0.0, s), DomainError);
    CHECK_THROWS_AS(squeezed_state(1.0, s), DomainError);
    CHECK_THROWS_AS(squeezed_state(-0.3, s), DomainError);
    CHECK_THROWS_AS(chsh_closed(1.0, squeezed_optimal_angles()), DomainError);
    CHECK_THROWS_AS(bogoliubov_pair(1.2, s), DomainError);
  }
}

TEST_CASE("Bogoliubov operators") {
  const FockSpace s(12);
  const double eta = 0.55;
  const BogoliubovPair p = bogoliubov_pair(eta, s);
  const DenseOperator id = DenseOperator::identity(s.dim());
  const DenseOperator zero(s.dim());
  const DenseOperator ad = adjoint(p.alpha), bd = adjoint(p.beta);
  CHECK(interior_diff(s, commutator(p.alpha, ad), id, 1) <= 1e-12);
  CHECK(interior_diff(s, commutator(p.beta, bd), id, 1) <= 1e-12);
  CHECK(interior_diff(s, commutator(p.alpha, p.beta), zero, 1) <= 1e-12);
  CHECK(interior_diff(s, commutator(p.alpha, bd), zero, 1) <= 1e-12);

  SUBCASE("squeezed state is their common vacuum") {
    for (double e : {0.1, 0.3, 0.55, 0.8}) {
      const BogoliubovPair q = bogoliubov_pair(e, s);
      const Ket psi = squeezed_state(e, s).ket;
      CHECK((q.alpha * psi).norm() <= 1e-13);
      CHECK((q.beta * psi).norm() <= 1e-13);
    }
  }
  SUBCASE("hamiltonian is the Bogoliubov number operator away from the edge") {
    const DenseOperator h = squeezed_hamiltonian(eta, s);
    CHECK(h.is_hermitian());
    const DenseOperator number = ad * p.alpha + bd * p.beta;
    CHECK(interior_diff(s, h, number, 2) <= 1e-12);
  }
}

TEST_CASE("pair flips") {
  const DenseOperator f = local_pair_flip(6, 0.4);
  const Complex e = std::polar(1.0, 0.4);
  CHECK(std::abs(f(1, 0) - e) <= 1e-15);
  CHECK(std::abs(f(0, 1) - std::conj(e)) <= 1e-15);
  CHECK(std::abs(f(5, 4) - e) <= 1e-15);
  CHECK(f(2, 1) == Complex(0.0));
  CHECK(f.is_hermitian());
  CHECK(max_abs_diff(f * f, DenseOperator::identity(6)) <= 1e-15);
  CHECK_THROWS_AS(local_pair_flip(5, 0.0), DomainError);

  const FockSpace s(6);
  const DenseOperator a = pair_flip(s, Side::A, 1.1);
  const DenseOperator b = pair_flip(s, Side::B, -0.2);
  CHECK(max_abs_diff(commutator(a, b), DenseOperator(s.dim())) <= 1e-15);
  CHECK(validate_quadruple(quadruple(s, AngleSet(0.1, 0.2, 0.3, 0.4))).passed);
}

TEST_CASE("closed form") {
  CHECK(correlation_prefactor(0.5) == doctest::Approx(0.8));
  CHECK(std::abs(correlator_closed(0.5, 0.3, 0.2) - 0.8 * std::cos(0.5)) <= 1e-15);
  const AngleSet best = squeezed_optimal_angles();
  CHECK(std::abs(chsh_closed(0.9, best) - 2.81280045554869733463) <= 1e-12);
  CHECK(std::abs(chsh_closed(0.6, best) - 2.49567099242310890965) <= 1e-12);
  CHECK(std::abs(chsh_closed(0.999, best) - 2.828425709117707) <= 1e-12);
  CHECK(std::abs(optimize_angles(closed_form(0.7)).value - 2.6575825333185678769) <= 1e-9);

  double prev = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double c = correlation_prefactor(i / 1000.0);
    CHECK(c > prev);
    CHECK(c < 1.0);
    prev = c;
  }
}

TEST_CASE("matrix oracle reproduces the closed form") {
  std::mt19937_64 rng(41);
  for (std::size_t cutoff : {4u, 8u, 12u}) {
    const FockSpace s(cutoff);
    for (int trial = 0; trial < 20; ++trial) {
      const double eta = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
      const AngleSet a = random_angles(rng);
      CHECK(std::abs(chsh_oracle(eta, a, s) - chsh_closed(eta, a)) <= 1e-12);
    }
  }
  const FockSpace big(40);
  for (double eta : {0.2, 0.9}) {
    const AngleSet a = random_angles(rng);
    CHECK(std::abs(chsh_oracle(eta, a, big) - chsh_closed(eta, a)) <= 1e-12);
  }
}

TEST_CASE("violation window") {
  const double lower = std::numbers::sqrt2 - 1.0;
  const auto [lo, hi] = violation_window();
  CHECK(lo == lower);
  CHECK(hi == 1.0);
  CHECK(std::abs(bisect_window_lower() - lower) <= 1e-12);
  const AngleSet best = squeezed_optimal_angles();
  CHECK(chsh_closed(lower - 1e-9, best) < 2.0);
  CHECK(chsh_closed(lower + 1e-9, best) > 2.0);
  // Continuity across the endpoint.
  CHECK(std::abs(chsh_closed(lower + 1e-12, best) - chsh_closed(lower - 1e-12, best)) <= 1e-10);
}

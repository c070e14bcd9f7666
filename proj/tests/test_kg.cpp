#include <cmath>
#include <random>
#include <string>

#include "doctest.h"

#include "chsh/error.hpp"
#include "chsh/kg.hpp"
#include "oracles.hpp"

using namespace chsh;
using namespace chsh::kg;

namespace {

TestFunction packet(Vec3 center, double width = 1.0, double mass = 1.0) {
  TestFunction f;
  f.center = center;
  f.width = width;
  f.mass = mass;
  return f;
}

TestFunction random_packet(std::mt19937_64& rng, double mass) {
  std::uniform_real_distribution<double> c(-2.0, 2.0), w(0.6, 2.0), ph(-3.0, 3.0);
  TestFunction f = packet({c(rng), c(rng), c(rng)}, w(rng), mass);
  f.amplitude = std::polar(std::uniform_real_distribution<double>(0.5, 2.0)(rng), ph(rng));
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) f.center_energy = 1.0 + c(rng);
  return f;
}

}  // namespace

TEST_CASE("test function evaluation") {
  TestFunction f = packet({0.0, 0.0, 0.5});
  CHECK(f.energy_center() == doctest::Approx(std::sqrt(1.25)));
  CHECK(std::abs(f.evaluate(f.center) - Complex(1.0)) <= 1e-15);
  f.center_energy = 3.0;
  CHECK(f.energy_center() == 3.0);
  f.width = 0.0;
  CHECK_THROWS_AS(f.validate(), DomainError);
  CHECK(packet({0, 0, 0}, 0.25).momentum_width() == 4.0);
}

TEST_CASE("norm of a Gaussian packet matches independent references") {
  const TestFunction f = packet({0.0, 0.0, 0.5});
  const double value = shell_inner_product(f, f).real();
  // Reference evaluated to 30 digits with an arbitrary-precision integrator.
  CHECK(std::abs(value - 0.00588183480748348936210) <= 1e-8 * value);

  // Simpson on the one-dimensional radial reduction.
  for (double c : {0.0, 0.5, 1.7}) {
    for (double sigma : {0.7, 1.0, 1.6}) {
      TestFunction g = packet({0.0, 0.0, c}, sigma);
      g.amplitude = Complex(0.6, -0.8) * 1.3;
      const double ref = oracle::gaussian_norm_radial(1.3, 1.0, c, g.energy_center(), sigma, 4000);
      const double got = shell_inner_product(g, g).real();
      CHECK(std::abs(got - ref) <= 1e-8 * ref);
    }
  }
}

TEST_CASE("inner product properties on random packets") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const double mass = std::uniform_real_distribution<double>(0.2, 2.0)(rng);
    const TestFunction f = random_packet(rng, mass);
    const TestFunction g = random_packet(rng, mass);
    const Complex ff = shell_inner_product(f, f);
    const Complex gg = shell_inner_product(g, g);
    const Complex fg = shell_inner_product(f, g);
    const Complex gf = shell_inner_product(g, f);
    CHECK(ff.real() > 0.0);
    CHECK(std::abs(ff.imag()) <= 1e-14 * ff.real());
    CHECK(std::abs(fg - std::conj(gf)) <= 1e-12 * std::abs(fg) + 1e-18);
    CHECK(std::norm(fg) <= ff.real() * gg.real() * (1.0 + 1e-12));

    const Complex c(0.3, -1.7);
    CHECK(std::abs(shell_inner_product(f.scaled(c), g) - c * fg) <= 1e-12 * std::abs(fg) + 1e-18);
    CHECK(std::abs(shell_inner_product(f, g.scaled(c)) - std::conj(c) * fg) <=
          1e-12 * std::abs(fg) + 1e-18);
    const NormEstimate n = test_norm(f.scaled(c));
    CHECK(std::abs(n.value - std::norm(c) * ff.real()) <= 1e-12 * n.value);
  }
}

TEST_CASE("quadrature converges") {
  const TestFunction f = packet({0.3, -0.4, 1.2}, 0.8);
  const NormEstimate n = test_norm(f);
  CHECK(n.error <= 1e-10 * n.value);
  ShellQuadrature coarse;
  coarse.radial = 16;
  coarse.angular = 6;
  const NormEstimate rough = test_norm(f, coarse);
  CHECK(rough.error > n.error);
}

TEST_CASE("well separated packets are orthogonal") {
  const TestFunction f = normalize(packet({0.0, 0.0, 6.0}));
  const TestFunction g = normalize(packet({0.0, 0.0, -6.0}));
  CHECK(std::abs(shell_inner_product(f, g)) <= 1e-6);
  CHECK(smeared_commutator(Species::particle, f, Species::antiparticle, f) == Complex(0.0));
  CHECK(std::abs(smeared_commutator(Species::particle, f, Species::particle, f) - Complex(1.0)) <=
        1e-10);
}

TEST_CASE("normalize") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 5; ++trial) {
    const TestFunction f = random_packet(rng, 1.0);
    const TestFunction n = normalize(f);
    CHECK(std::abs(shell_inner_product(n, n).real() - 1.0) <= 1e-10);
    const TestFunction twice = normalize(n);
    CHECK(std::abs(twice.amplitude - n.amplitude) <= 1e-10 * std::abs(n.amplitude));
    const TestFunction scaled = normalize(f.scaled(Complex(5.0)));
    CHECK(std::abs(scaled.amplitude - n.amplitude) <= 1e-10 * std::abs(n.amplitude));
  }
  TestFunction zero = packet({0, 0, 0});
  zero.amplitude = 0.0;
  CHECK_THROWS_AS(normalize(zero), DegenerateInputError);
}

TEST_CASE("precondition and precision errors") {
  const TestFunction f = packet({0.0, 0.0, 0.5});
  CHECK_THROWS_AS(shell_inner_product(f, packet({0.0, 0.0, 0.5}, 1.0, 2.0)), PreconditionError);
  ShellQuadrature tight;
  tight.k_max = 1.0;
  CHECK_THROWS_AS(shell_inner_product(f, f, tight), PrecisionError);
  ShellQuadrature broken;
  broken.radial = 0;
  CHECK_THROWS_AS(shell_inner_product(f, f, broken), DomainError);
}

TEST_CASE("oscillator pair reduction") {
  const TestFunction f = normalize(packet({0.0, 0.0, 6.0}));
  const TestFunction g = normalize(packet({0.0, 0.0, -6.0}));
  const PairCheck ok = check_oscillator_pair(f, g);
  CHECK(std::abs(ok.norm_f - 1.0) <= 1e-10);
  CHECK(ok.overlap <= kPairTolerance);

  const AngleSet best = squeezed_optimal_angles();
  CHECK(std::abs(sigma_chsh(0.6, best, f, g) - 2.49567099242310890965) <= 1e-12);
  CHECK(std::abs(sigma_chsh_matrix(0.6, best, f, g, fock::FockSpace(12)) -
                 sigma_chsh(0.6, best, f, g)) <= 1e-12);
  CHECK_THROWS_AS(sigma_chsh(1.0, best, f, g), DomainError);
  CHECK_THROWS_AS(sigma_chsh(0.0, best, f, g), DomainError);

  std::string message;
  try {
    check_oscillator_pair(f, f);
  } catch (const PreconditionError& e) {
    message = e.what();
  }
  CHECK(message.find("⟨f|g⟩") != std::string::npos);
  try {
    check_oscillator_pair(f.scaled(2.0), g);
  } catch (const PreconditionError& e) {
    message = e.what();
  }
  CHECK(message.find("‖f‖") != std::string::npos);
  CHECK_THROWS_AS(sigma_chsh(0.6, best, f, packet({0.0, 0.0, -6.0}, 1.0)), PreconditionError);
}

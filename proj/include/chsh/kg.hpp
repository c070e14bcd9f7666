#pragma once

#include <array>
#include <optional>

#include "chsh/engine.hpp"
#include "chsh/fock.hpp"
#include "chsh/linalg.hpp"

namespace chsh::kg {

using Vec3 = std::array<double, 3>;

/// Gaussian wave packet in momentum space, evaluated on the mass shell:
///
///   f̂(ω_k, k) = A · exp(−σ²(|k − k_c|² + (ω_k − E_c)²)/2),  ω_k = √(k² + m²).
///
/// σ is the spacetime width of the packet, so 1/σ is its momentum width.
/// E_c defaults to the on-shell energy of k_c.
struct TestFunction {
  Complex amplitude{1.0, 0.0};
  double mass = 1.0;
  Vec3 center{0.0, 0.0, 0.0};
  std::optional<double> center_energy;
  double width = 1.0;

  /// Throws DomainError for width ≤ 0, negative mass or non-finite parameters.
  void validate() const;

  double omega(const Vec3& k) const;
  double energy_center() const;
  double momentum_width() const { return 1.0 / width; }
  Complex evaluate(const Vec3& k) const;
  TestFunction scaled(Complex c) const;
};

/// Spherical product rule for mass-shell integrals: Gauss-Legendre in |k|,
/// Gauss-Legendre in cos θ (`angular` nodes) and 2·`angular` uniform nodes in φ.
struct ShellQuadrature {
  int radial = 128;
  int angular = 32;
  /// Radial cutoff; 0 selects [max(0, |k_c| − 10/σ), |k_c| + 10/σ] over both functions.
  double k_max = 0.0;
  /// Absolute bound the estimated tail beyond the radial interval must stay under (÷10).
  double tolerance = 1e-10;

  ShellQuadrature doubled() const;
};

/// ∫ d³k / ((2π)³ 2ω_k) f̂(ω_k, k) ĝ*(ω_k, k).
/// Throws PreconditionError on differing masses and PrecisionError when the
/// estimated tail exceeds tolerance/10.
Complex shell_inner_product(const TestFunction& f, const TestFunction& g,
                            const ShellQuadrature& q = {});

struct NormEstimate {
  double value;
  /// |value − value at doubled resolution|.
  double error;
};

/// ‖f‖² with a self-convergence error estimate.
NormEstimate test_norm(const TestFunction& f, const ShellQuadrature& q = {});

/// f/‖f‖. Throws DegenerateInputError on a vanishing norm.
TestFunction normalize(const TestFunction& f, const ShellQuadrature& q = {});

enum class Species { particle, antiparticle };

/// [c_f, c†_g] for smeared annihilators c ∈ {a, b}: ⟨f|g⟩ within one species,
/// zero across species.
Complex smeared_commutator(Species x, const TestFunction& f, Species y, const TestFunction& g,
                           const ShellQuadrature& q = {});

/// Tolerance on ‖f‖² − 1, ‖g‖² − 1 and |⟨f|g⟩| for the oscillator-pair reduction.
inline constexpr double kPairTolerance = 1e-6;

struct PairCheck {
  double norm_f;
  double norm_g;
  double overlap;
};

/// Verifies f, g are normalized and mutually orthogonal within kPairTolerance.
/// Throws PreconditionError naming the violated bound.
PairCheck check_oscillator_pair(const TestFunction& f, const TestFunction& g,
                                const ShellQuadrature& q = {});

/// CHSH value of √(1−σ²) exp(σ a†_f b†_g)|0⟩ for the parity-pair quadruple.
/// Reduces to fock::chsh_closed(σ, angles) once check_oscillator_pair passes.
double sigma_chsh(double sigma, const AngleSet& angles, const TestFunction& f,
                  const TestFunction& g, const ShellQuadrature& q = {});

/// Same as sigma_chsh but evaluated on the truncated Fock matrices.
double sigma_chsh_matrix(double sigma, const AngleSet& angles, const TestFunction& f,
                         const TestFunction& g, const fock::FockSpace& space,
                         const ShellQuadrature& q = {});

}  // namespace chsh::kg

#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "chsh/linalg.hpp"

namespace chsh {

/// Measurement phases (α₁, α₂, β₁, β₂), each reduced to [−π, π).
class AngleSet {
 public:
  AngleSet(double alpha1, double alpha2, double beta1, double beta2);

  double alpha1() const noexcept { return a1_; }
  double alpha2() const noexcept { return a2_; }
  double beta1() const noexcept { return b1_; }
  double beta2() const noexcept { return b2_; }
  double alpha(int k) const { return k == 1 ? a1_ : a2_; }
  double beta(int i) const { return i == 1 ? b1_ : b2_; }

  /// Reduces an angle to [−π, π).
  static double reduce(double angle);

 private:
  double a1_, a2_, b1_, b2_;
};

/// Angles at which the squeezed-state correlator attains 2√2·c:
/// α₁ = 0, α₂ = π/2, β₁ = −π/4, β₂ = π/4.
AngleSet squeezed_optimal_angles();

/// Four measurement operators on a common bipartite space. A-side operators
/// act on the left factor, B-side operators on the right one.
struct ChshQuadruple {
  DenseOperator a1, a2, b1, b2;
  std::optional<AngleSet> angles;

  std::size_t dim() const noexcept { return a1.dim(); }
};

/// Deviations from the quadruple axioms: hermitian, squaring to 1, and A/B
/// operators commuting.
struct ValidationReport {
  double hermiticity = 0.0;
  double involution = 0.0;
  /// max |[A_i, B_k]| over i, k; the per-pair values are in `commutators`,
  /// ordered (A₁B₁, A₁B₂, A₂B₁, A₂B₂).
  double commutator = 0.0;
  std::array<double, 4> commutators{};
  double tolerance = 0.0;
  bool passed = false;
};

/// (A₁+A₂)B₁ + (A₁−A₂)B₂. Throws ShapeError if the four dimensions differ.
DenseOperator chsh_operator(const ChshQuadruple& q);

/// ⟨ψ|C|ψ⟩ evaluated as four pair expectations without forming C.
/// Throws ConsistencyError if the imaginary residue exceeds 1e-10.
double chsh_value(const Ket& psi, const ChshQuadruple& q);

/// Checks the quadruple axioms at tolerance 1e-12·dim.
ValidationReport validate_quadruple(const ChshQuadruple& q);

/// c·(k + s₁cos(α₁+β₁) + s₂cos(α₂+β₁) + s₃cos(α₁+β₂) + s₄cos(α₂+β₂)).
struct ClosedFormCorrelator {
  double prefactor = 1.0;
  double constant = 0.0;
  std::array<int, 4> signs{1, 1, 1, -1};

  double operator()(const AngleSet& angles) const;
  double operator()(double a1, double a2, double b1, double b2) const;
};

struct OptimizerOptions {
  int grid_points = 24;
  /// Refinement stops once the pattern-search step drops below this.
  double step_tolerance = 1e-10;
};

struct OptimizationResult {
  AngleSet angles;
  /// max |cf| found; cf(angles) is either +value or −value.
  double value;
};

/// Maximizes |cf| over all angles: a uniform grid on [−π, π)⁴ followed by
/// pattern-search polishing of the lexicographically first grid maximum.
OptimizationResult optimize_angles(const ClosedFormCorrelator& cf,
                                   const OptimizerOptions& options = {});

}  // namespace chsh

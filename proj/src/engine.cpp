#include "chsh/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chsh/error.hpp"

namespace chsh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kImaginaryResidueLimit = 1e-10;

void require_common_dim(const ChshQuadruple& q) {
  const std::size_t n = q.a1.dim();
  if (q.a2.dim() != n || q.b1.dim() != n || q.b2.dim() != n) {
    throw ShapeError("ChshQuadruple: operators act on different dimensions");
  }
}

}  // namespace

AngleSet::AngleSet(double alpha1, double alpha2, double beta1, double beta2)
    : a1_(reduce(alpha1)), a2_(reduce(alpha2)), b1_(reduce(beta1)), b2_(reduce(beta2)) {}

double AngleSet::reduce(double angle) {
  double r = angle - 2.0 * kPi * std::floor((angle + kPi) / (2.0 * kPi));
  if (r >= kPi) r -= 2.0 * kPi;
  if (r < -kPi) r = -kPi;
  return r;
}

AngleSet squeezed_optimal_angles() { return AngleSet(0.0, kPi / 2.0, -kPi / 4.0, kPi / 4.0); }

DenseOperator chsh_operator(const ChshQuadruple& q) {
  require_common_dim(q);
  return (q.a1 + q.a2) * q.b1 + (q.a1 - q.a2) * q.b2;
}

double chsh_value(const Ket& psi, const ChshQuadruple& q) {
  require_common_dim(q);
  if (psi.dim() != q.dim()) {
    throw ShapeError("chsh_value: state dimension " + std::to_string(psi.dim()) +
                     " does not match operator dimension " + std::to_string(q.dim()));
  }
  if (!psi.is_normalized()) throw DomainError("chsh_value: state is not normalized");

  // ⟨ψ|A B|ψ⟩ = ⟨A†ψ|Bψ⟩ for each of the four pairs.
  const Ket b1psi = q.b1 * psi;
  const Ket b2psi = q.b2 * psi;
  const Ket a1psi = apply_adjoint(q.a1, psi);
  const Ket a2psi = apply_adjoint(q.a2, psi);
  const Complex value =
      inner(a1psi, b1psi) + inner(a2psi, b1psi) + inner(a1psi, b2psi) - inner(a2psi, b2psi);
  if (std::abs(value.imag()) > kImaginaryResidueLimit) {
    throw ConsistencyError("chsh_value: imaginary residue " + std::to_string(value.imag()) +
                           " exceeds 1e-10; the quadruple is not hermitian");
  }
  return value.real();
}

ValidationReport validate_quadruple(const ChshQuadruple& q) {
  require_common_dim(q);
  ValidationReport report;
  const DenseOperator id = DenseOperator::identity(q.dim());
  for (const DenseOperator* m : {&q.a1, &q.a2, &q.b1, &q.b2}) {
    report.hermiticity = std::max(report.hermiticity, m->hermiticity_deviation());
    report.involution = std::max(report.involution, max_abs_diff(*m * *m, id));
  }
  report.commutators = {max_abs(commutator(q.a1, q.b1)), max_abs(commutator(q.a1, q.b2)),
                        max_abs(commutator(q.a2, q.b1)), max_abs(commutator(q.a2, q.b2))};
  report.commutator = *std::max_element(report.commutators.begin(), report.commutators.end());
  report.tolerance = kStructuralTolerance * static_cast<double>(q.dim());
  report.passed = report.hermiticity <= report.tolerance &&
                  report.involution <= report.tolerance &&
                  report.commutator <= report.tolerance;
  return report;
}

double ClosedFormCorrelator::operator()(double a1, double a2, double b1, double b2) const {
  return prefactor * (constant + signs[0] * std::cos(a1 + b1) + signs[1] * std::cos(a2 + b1) +
                      signs[2] * std::cos(a1 + b2) + signs[3] * std::cos(a2 + b2));
}

double ClosedFormCorrelator::operator()(const AngleSet& angles) const {
  return (*this)(angles.alpha1(), angles.alpha2(), angles.beta1(), angles.beta2());
}

OptimizationResult optimize_angles(const ClosedFormCorrelator& cf,
                                   const OptimizerOptions& options) {
  const int n = std::max(1, options.grid_points);
  const double spacing = 2.0 * kPi / n;
  auto grid = [&](int j) { return -kPi + spacing * j; };

  // Strict comparison in lexicographic loop order keeps the smallest tuple on ties.
  std::array<double, 4> best{grid(0), grid(0), grid(0), grid(0)};
  double best_value = -1.0;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i3 = 0; i3 < n; ++i3) {
        for (int i4 = 0; i4 < n; ++i4) {
          const double v = std::abs(cf(grid(i1), grid(i2), grid(i3), grid(i4)));
          if (v > best_value) {
            best_value = v;
            best = {grid(i1), grid(i2), grid(i3), grid(i4)};
          }
        }
      }
    }
  }

  auto objective = [&](const std::array<double, 4>& x) {
    return std::abs(cf(x[0], x[1], x[2], x[3]));
  };
  double step = spacing / 2.0;
  while (step >= options.step_tolerance) {
    bool improved = false;
    for (std::size_t c = 0; c < best.size(); ++c) {
      for (double dir : {1.0, -1.0}) {
        std::array<double, 4> trial = best;
        trial[c] += dir * step;
        const double v = objective(trial);
        if (v > best_value) {
          best_value = v;
          best = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step /= 2.0;
  }

  AngleSet angles(best[0], best[1], best[2], best[3]);
  return {angles, std::abs(cf(angles))};
}

}  // namespace chsh

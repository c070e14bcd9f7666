#pragma once

#include <string>
#include <vector>

namespace chsh::rindler {

/// Flag text attached to scan rows whose summed form factor exceeds 1.
inline constexpr const char* kSupraTsirelsonFlag = "supra-Tsirelson (summed modes)";

/// Finite set of Rindler mode frequencies with proper acceleration a.
class RindlerModeSet {
 public:
  /// Throws DomainError unless every ω > 0, the list is non-empty and sorted
  /// ascending, and a > 0.
  RindlerModeSet(std::vector<double> frequencies, double acceleration);

  /// Same modes at acceleration 2πT.
  static RindlerModeSet at_temperature(std::vector<double> frequencies, double temperature);

  const std::vector<double>& frequencies() const noexcept { return omegas_; }
  double acceleration() const noexcept { return accel_; }
  double temperature() const;

 private:
  std::vector<double> omegas_;
  double accel_;
};

/// T = a/(2π). Throws DomainError for a ≤ 0.
double unruh_temperature(double acceleration);

/// η = e^{−πω/a}.
double mode_squeezing(double omega, double acceleration);

/// 1/cosh(ω/(2T)) for one mode.
double mode_form_factor(double omega, double acceleration);

/// τ = Σ 1/cosh(ωᵢ/(2T)).
double tau(const RindlerModeSet& modes);

/// τ = Σ 2(e^{πωᵢ/a} − e^{−πωᵢ/a})/(e^{2πωᵢ/a} − e^{−2πωᵢ/a}), evaluated in
/// overflow-safe exponential form.
double tau_exponential_form(const RindlerModeSet& modes);

/// 2√2·τ at α₁ = 0, α₂ = π/2, β₁ = −π/4, β₂ = π/4.
double rindler_chsh(const RindlerModeSet& modes);

struct ScanRow {
  double temperature;
  double tau;
  double chsh;
  /// Empty, or kSupraTsirelsonFlag when τ > 1.
  std::string flag;
};

/// One row per temperature, recomputing with a = 2πT. Throws DomainError
/// unless the grid is positive and ascending.
std::vector<ScanRow> temperature_scan(const std::vector<double>& frequencies,
                                      const std::vector<double>& temperatures);

}  // namespace chsh::rindler

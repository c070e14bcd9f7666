#include "chsh/rindler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chsh/error.hpp"

namespace chsh::rindler {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

/// 2(eˣ − e⁻ˣ)/(e²ˣ − e⁻²ˣ) for x > 0.
double exponential_ratio(double x) {
  if (x > 20.0) {
    // Multiply through by e^{−2x}.
    const double e1 = std::exp(-x);
    const double e3 = std::exp(-3.0 * x);
    const double e4 = std::exp(-4.0 * x);
    return 2.0 * (e1 - e3) / (1.0 - e4);
  }
  // eˣ − e⁻ˣ = e⁻ˣ·expm1(2x), e²ˣ − e⁻²ˣ = e⁻²ˣ·expm1(4x).
  return 2.0 * std::exp(x) * std::expm1(2.0 * x) / std::expm1(4.0 * x);
}

}  // namespace

RindlerModeSet::RindlerModeSet(std::vector<double> frequencies, double acceleration)
    : omegas_(std::move(frequencies)), accel_(acceleration) {
  require_positive(accel_, "acceleration");
  if (omegas_.empty()) throw DomainError("RindlerModeSet: at least one frequency required");
  for (double w : omegas_) require_positive(w, "mode frequency");
  if (!std::is_sorted(omegas_.begin(), omegas_.end())) {
    throw DomainError("RindlerModeSet: frequencies must be ascending");
  }
}

RindlerModeSet RindlerModeSet::at_temperature(std::vector<double> frequencies,
                                              double temperature) {
  require_positive(temperature, "temperature");
  return RindlerModeSet(std::move(frequencies), 2.0 * kPi * temperature);
}

double RindlerModeSet::temperature() const { return unruh_temperature(accel_); }

double unruh_temperature(double acceleration) {
  require_positive(acceleration, "acceleration");
  return acceleration / (2.0 * kPi);
}

double mode_squeezing(double omega, double acceleration) {
  require_positive(omega, "mode frequency");
  require_positive(acceleration, "acceleration");
  return std::exp(-kPi * omega / acceleration);
}

double mode_form_factor(double omega, double acceleration) {
  require_positive(omega, "mode frequency");
  return 1.0 / std::cosh(omega / (2.0 * unruh_temperature(acceleration)));
}

double tau(const RindlerModeSet& modes) {
  double sum = 0.0;
  for (double w : modes.frequencies()) sum += mode_form_factor(w, modes.acceleration());
  return sum;
}

double tau_exponential_form(const RindlerModeSet& modes) {
  double sum = 0.0;
  for (double w : modes.frequencies()) sum += exponential_ratio(kPi * w / modes.acceleration());
  return sum;
}

double rindler_chsh(const RindlerModeSet& modes) {
  return 2.0 * std::numbers::sqrt2 * tau(modes);
}

std::vector<ScanRow> temperature_scan(const std::vector<double>& frequencies,
                                      const std::vector<double>& temperatures) {
  if (temperatures.empty()) throw DomainError("temperature_scan: empty temperature grid");
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    require_positive(temperatures[i], "temperature");
    if (i > 0 && !(temperatures[i] > temperatures[i - 1])) {
      throw DomainError("temperature_scan: temperature grid must be strictly ascending");
    }
  }
  std::vector<ScanRow> rows;
  rows.reserve(temperatures.size());
  for (double t : temperatures) {
    const RindlerModeSet modes = RindlerModeSet::at_temperature(frequencies, t);
    const double form = tau(modes);
    rows.push_back({t, form, rindler_chsh(modes), form > 1.0 ? kSupraTsirelsonFlag : ""});
  }
  return rows;
}

}  // namespace chsh::rindler

#include "chsh/kg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "chsh/error.hpp"
#include "chsh/quadrature.hpp"

namespace chsh::kg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWidthsToCutoff = 10.0;
constexpr double kTailSpanWidths = 20.0;
constexpr int kTailNodes = 64;

double length(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

/// d³k/((2π)³ 2ω) with the angular part stripped: k²/((2π)³ 2ω).
double radial_measure(double k, double mass) {
  return k * k / (std::pow(2.0 * kPi, 3) * 2.0 * std::sqrt(k * k + mass * mass));
}

/// Upper bound on |f̂| at radius k, using |k − k_c| ≥ ||k| − |k_c||.
double envelope(const TestFunction& f, double k) {
  const double d = (k - length(f.center)) * f.width;
  return std::abs(f.amplitude) * std::exp(-0.5 * d * d);
}

struct Frame {
  Vec3 e1, e2, e3;
};

/// Orthonormal frame with e3 along `axis` (or z when axis vanishes).
Frame frame_along(const Vec3& axis) {
  const double n = length(axis);
  Vec3 e3 = n > 0.0 ? Vec3{axis[0] / n, axis[1] / n, axis[2] / n} : Vec3{0.0, 0.0, 1.0};
  Vec3 helper = std::abs(e3[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const double proj = helper[0] * e3[0] + helper[1] * e3[1] + helper[2] * e3[2];
  Vec3 e1{helper[0] - proj * e3[0], helper[1] - proj * e3[1], helper[2] - proj * e3[2]};
  const double n1 = length(e1);
  for (double& x : e1) x /= n1;
  const Vec3 e2{e3[1] * e1[2] - e3[2] * e1[1], e3[2] * e1[0] - e3[0] * e1[2],
                e3[0] * e1[1] - e3[1] * e1[0]};
  return {e1, e2, e3};
}

}  // namespace

void TestFunction::validate() const {
  if (!(std::isfinite(width) && width > 0.0)) {
    throw DomainError("TestFunction: width must be positive and finite");
  }
  if (!(std::isfinite(mass) && mass >= 0.0)) {
    throw DomainError("TestFunction: mass must be non-negative and finite");
  }
  for (double c : center) {
    if (!std::isfinite(c)) throw DomainError("TestFunction: center momentum must be finite");
  }
  if (center_energy && !std::isfinite(*center_energy)) {
    throw DomainError("TestFunction: center energy must be finite");
  }
}

double TestFunction::omega(const Vec3& k) const {
  return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + mass * mass);
}

double TestFunction::energy_center() const {
  return center_energy ? *center_energy : omega(center);
}

Complex TestFunction::evaluate(const Vec3& k) const {
  const double dx = k[0] - center[0];
  const double dy = k[1] - center[1];
  const double dz = k[2] - center[2];
  const double de = omega(k) - energy_center();
  const double exponent = -0.5 * width * width * (dx * dx + dy * dy + dz * dz + de * de);
  return amplitude * std::exp(exponent);
}

TestFunction TestFunction::scaled(Complex c) const {
  TestFunction out = *this;
  out.amplitude *= c;
  return out;
}

ShellQuadrature ShellQuadrature::doubled() const {
  ShellQuadrature out = *this;
  out.radial *= 2;
  out.angular *= 2;
  return out;
}

Complex shell_inner_product(const TestFunction& f, const TestFunction& g,
                            const ShellQuadrature& q) {
  f.validate();
  g.validate();
  if (f.mass != g.mass) {
    throw PreconditionError("shell_inner_product: test functions live on different mass shells");
  }
  if (q.radial < 1 || q.angular < 1) {
    throw DomainError("shell_inner_product: node counts must be positive");
  }
  const double mass = f.mass;
  const double reach = kWidthsToCutoff * std::max(f.momentum_width(), g.momentum_width());
  const double cf = length(f.center);
  const double cg = length(g.center);
  double k_lo = 0.0;
  double k_hi = q.k_max;
  if (k_hi <= 0.0) {
    k_lo = std::max(0.0, std::min(cf, cg) - reach);
    k_hi = std::max(cf, cg) + reach;
  }

  // Envelope bound on the part of the radial line left out of [k_lo, k_hi].
  auto tail_piece = [&](double lo, double hi) {
    if (hi <= lo) return 0.0;
    const QuadratureRule rule = gauss_legendre(kTailNodes, lo, hi);
    double sum = 0.0;
    for (int i = 0; i < kTailNodes; ++i) {
      const double k = rule.nodes[i];
      sum += rule.weights[i] * 4.0 * kPi * radial_measure(k, mass) * envelope(f, k) *
             envelope(g, k);
    }
    return sum;
  };
  const double tail = tail_piece(0.0, k_lo) + tail_piece(k_hi, k_hi + kTailSpanWidths * reach);
  if (tail > q.tolerance / 10.0) {
    std::ostringstream msg;
    msg << "shell_inner_product: estimated tail " << tail << " exceeds tolerance/10 ("
        << q.tolerance / 10.0 << "); raise k_max or the tolerance";
    throw PrecisionError(msg.str());
  }

  const Frame frame = frame_along({f.center[0] + g.center[0], f.center[1] + g.center[1],
                                   f.center[2] + g.center[2]});
  const QuadratureRule radial = gauss_legendre(q.radial, k_lo, k_hi);
  const QuadratureRule polar = gauss_legendre(q.angular, -1.0, 1.0);
  const int n_phi = 2 * q.angular;
  const double w_phi = 2.0 * kPi / n_phi;

  Complex total = 0.0;
  for (int ir = 0; ir < q.radial; ++ir) {
    const double k = radial.nodes[ir];
    Complex shell = 0.0;
    for (int it = 0; it < q.angular; ++it) {
      const double mu = polar.nodes[it];
      const double sin_theta = std::sqrt(std::max(0.0, 1.0 - mu * mu));
      Complex ring = 0.0;
      for (int ip = 0; ip < n_phi; ++ip) {
        const double phi = w_phi * ip;
        const double c1 = k * sin_theta * std::cos(phi);
        const double c2 = k * sin_theta * std::sin(phi);
        const double c3 = k * mu;
        const Vec3 kv{c1 * frame.e1[0] + c2 * frame.e2[0] + c3 * frame.e3[0],
                      c1 * frame.e1[1] + c2 * frame.e2[1] + c3 * frame.e3[1],
                      c1 * frame.e1[2] + c2 * frame.e2[2] + c3 * frame.e3[2]};
        ring += f.evaluate(kv) * std::conj(g.evaluate(kv));
      }
      shell += polar.weights[it] * w_phi * ring;
    }
    total += radial.weights[ir] * radial_measure(k, mass) * shell;
  }
  return total;
}

NormEstimate test_norm(const TestFunction& f, const ShellQuadrature& q) {
  const double value = shell_inner_product(f, f, q).real();
  const double fine = shell_inner_product(f, f, q.doubled()).real();
  return {value, std::abs(fine - value)};
}

TestFunction normalize(const TestFunction& f, const ShellQuadrature& q) {
  const double norm_sq = shell_inner_product(f, f, q).real();
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw DegenerateInputError("normalize: test function has vanishing norm");
  }
  return f.scaled(1.0 / std::sqrt(norm_sq));
}

Complex smeared_commutator(Species x, const TestFunction& f, Species y, const TestFunction& g,
                           const ShellQuadrature& q) {
  if (x != y) return 0.0;
  return shell_inner_product(f, g, q);
}

PairCheck check_oscillator_pair(const TestFunction& f, const TestFunction& g,
                                const ShellQuadrature& q) {
  const PairCheck check{shell_inner_product(f, f, q).real(), shell_inner_product(g, g, q).real(),
                        std::abs(shell_inner_product(f, g, q))};
  auto fail = [](const std::string& what, double value) {
    std::ostringstream msg;
    msg << "oscillator pair: " << what << " = " << value << " violates bound " << kPairTolerance;
    throw PreconditionError(msg.str());
  };
  if (std::abs(check.norm_f - 1.0) > kPairTolerance) fail("|‖f‖² − 1|", std::abs(check.norm_f - 1.0));
  if (std::abs(check.norm_g - 1.0) > kPairTolerance) fail("|‖g‖² − 1|", std::abs(check.norm_g - 1.0));
  if (check.overlap > kPairTolerance) fail("|⟨f|g⟩|", check.overlap);
  return check;
}

double sigma_chsh(double sigma, const AngleSet& angles, const TestFunction& f,
                  const TestFunction& g, const ShellQuadrature& q) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("sigma_chsh: sigma must lie in (0, 1)");
  check_oscillator_pair(f, g, q);
  return fock::chsh_closed(sigma, angles);
}

double sigma_chsh_matrix(double sigma, const AngleSet& angles, const TestFunction& f,
                         const TestFunction& g, const fock::FockSpace& space,
                         const ShellQuadrature& q) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("sigma_chsh_matrix: sigma must lie in (0, 1)");
  }
  check_oscillator_pair(f, g, q);
  return fock::chsh_oracle(sigma, angles, space);
}

}  // namespace chsh::kg

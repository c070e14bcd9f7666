#include "chsh/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chsh/error.hpp"

namespace chsh::fock {

namespace {

void require_open_unit(double eta, const char* where) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw DomainError(std::string(where) + ": eta must lie in (0, 1), got " +
                      std::to_string(eta));
  }
}

}  // namespace

FockSpace::FockSpace(std::size_t cutoff) : cutoff_(cutoff) {
  if (cutoff < 4 || cutoff % 2 != 0) {
    throw DomainError("FockSpace: cutoff must be even and at least 4, got " +
                      std::to_string(cutoff));
  }
}

DenseOperator local_annihilator(std::size_t cutoff) {
  DenseOperator a(cutoff);
  for (std::size_t n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

LadderMatrices ladder_matrices(const FockSpace& space) {
  const DenseOperator id = DenseOperator::identity(space.cutoff());
  const DenseOperator loc = local_annihilator(space.cutoff());
  const DenseOperator loc_dag = adjoint(loc);
  return {tensor(loc, id), tensor(loc_dag, id), tensor(id, loc), tensor(id, loc_dag)};
}

SqueezedState squeezed_state(double eta, const FockSpace& space) {
  require_open_unit(eta, "squeezed_state");
  std::vector<Complex> amps(space.dim());
  double coeff = std::sqrt(1.0 - eta * eta);
  double norm_sq = 0.0;
  for (std::size_t n = 0; n < space.cutoff(); ++n) {
    amps[space.index(n, n)] = coeff;
    norm_sq += coeff * coeff;
    coeff *= eta;
  }
  Ket raw(std::move(amps));
  return {eta, space, raw.normalized(), norm_sq};
}

BogoliubovPair bogoliubov_pair(double eta, const FockSpace& space) {
  require_open_unit(eta, "bogoliubov_pair");
  const LadderMatrices l = ladder_matrices(space);
  const double s = 1.0 / std::sqrt(1.0 - eta * eta);
  return {eta, s * (l.a - eta * l.b_dag), s * (l.b - eta * l.a_dag)};
}

DenseOperator squeezed_hamiltonian(double eta, const FockSpace& space) {
  require_open_unit(eta, "squeezed_hamiltonian");
  const std::size_t n = space.cutoff();
  const DenseOperator id = DenseOperator::identity(n);
  const DenseOperator loc = local_annihilator(n);
  const DenseOperator loc_dag = adjoint(loc);
  const DenseOperator number = loc_dag * loc;

  const double denom = 1.0 - eta * eta;
  DenseOperator h = ((1.0 + eta * eta) / denom) * (tensor(number, id) + tensor(id, number));
  h -= (2.0 * eta / denom) * (tensor(loc_dag, loc_dag) + tensor(loc, loc));
  h += (2.0 * eta * eta / denom) * DenseOperator::identity(space.dim());
  return h;
}

DenseOperator local_pair_flip(std::size_t cutoff, double phase) {
  if (cutoff % 2 != 0) throw DomainError("local_pair_flip: cutoff must be even");
  DenseOperator m(cutoff);
  const Complex up = std::polar(1.0, phase);
  for (std::size_t n = 0; n + 1 < cutoff; n += 2) {
    m(n + 1, n) = up;
    m(n, n + 1) = std::conj(up);
  }
  return m;
}

DenseOperator pair_flip(const FockSpace& space, Side side, double phase) {
  const DenseOperator id = DenseOperator::identity(space.cutoff());
  const DenseOperator local = local_pair_flip(space.cutoff(), phase);
  return side == Side::A ? tensor(local, id) : tensor(id, local);
}

ChshQuadruple quadruple(const FockSpace& space, const AngleSet& angles) {
  return {pair_flip(space, Side::A, angles.alpha1()), pair_flip(space, Side::A, angles.alpha2()),
          pair_flip(space, Side::B, angles.beta1()), pair_flip(space, Side::B, angles.beta2()),
          angles};
}

double correlation_prefactor(double eta) { return 2.0 * eta / (1.0 + eta * eta); }

double correlator_closed(double eta, double alpha_k, double beta_i) {
  require_open_unit(eta, "correlator_closed");
  return correlation_prefactor(eta) * std::cos(alpha_k + beta_i);
}

ClosedFormCorrelator closed_form(double eta) {
  return {correlation_prefactor(eta), 0.0, {1, 1, 1, -1}};
}

double chsh_closed(double eta, const AngleSet& angles) {
  require_open_unit(eta, "chsh_closed");
  return closed_form(eta)(angles);
}

double chsh_oracle(double eta, const AngleSet& angles, const FockSpace& space) {
  return chsh_value(squeezed_state(eta, space).ket, quadruple(space, angles));
}

double bisect_window_lower(double width) {
  const AngleSet angles = squeezed_optimal_angles();
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (chsh_closed(mid, angles) < 2.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> violation_window() {
  const double analytic = std::numbers::sqrt2 - 1.0;
  const double found = bisect_window_lower();
  if (std::abs(found - analytic) > 1e-10) {
    throw ConsistencyError("violation_window: bisection endpoint " + std::to_string(found) +
                           " disagrees with sqrt(2) - 1");
  }
  return {analytic, 1.0};
}

}  // namespace chsh::fock

#include "chsh/spin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chsh/error.hpp"

namespace chsh::spin {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

std::size_t pair_index(Spin s, int m_a, int m_b) {
  return index_of(s, m_a) * local_dim(s) + index_of(s, m_b);
}

}  // namespace

std::size_t local_dim(Spin s) { return s == Spin::half ? 2 : 3; }

std::size_t index_of(Spin s, int m) {
  if (s == Spin::half) {
    if (m == 1) return 0;
    if (m == -1) return 1;
  } else if (m >= -1 && m <= 1) {
    return static_cast<std::size_t>(1 - m);
  }
  throw DomainError("spin::index_of: magnetic number " + std::to_string(m) + " out of range");
}

SingletState singlet(Spin s) {
  const std::size_t d = local_dim(s);
  std::vector<Complex> amps(d * d);
  if (s == Spin::half) {
    const double c = 1.0 / std::sqrt(2.0);
    amps[pair_index(s, 1, -1)] = c;
    amps[pair_index(s, -1, 1)] = -c;
  } else {
    const double c = 1.0 / std::sqrt(3.0);
    amps[pair_index(s, 1, -1)] = c;
    amps[pair_index(s, 0, 0)] = -c;
    amps[pair_index(s, -1, 1)] = c;
  }
  return {s, Ket(std::move(amps))};
}

SpinMatrices spin_matrices(Spin s) {
  const std::size_t d = local_dim(s);
  // Basis ordered by descending m; S₊|m⟩ = √(j(j+1) − m(m+1)) |m+1⟩.
  const double j = s == Spin::half ? 0.5 : 1.0;
  DenseOperator raise(d), sz(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double m = j - static_cast<double>(i);
    sz(i, i) = m;
    if (i > 0) raise(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const DenseOperator lower = adjoint(raise);
  DenseOperator sx = 0.5 * (raise + lower);
  DenseOperator sy = Complex(0.0, -0.5) * (raise - lower);
  return {std::move(sx), std::move(sy), std::move(sz)};
}

DenseOperator total_spin_squared(Spin s) {
  const SpinMatrices m = spin_matrices(s);
  const DenseOperator id = DenseOperator::identity(local_dim(s));
  DenseOperator total(local_dim(s) * local_dim(s));
  for (const DenseOperator* c : {&m.x, &m.y, &m.z}) {
    const DenseOperator component = tensor(*c, id) + tensor(id, *c);
    total += component * component;
  }
  return total;
}

DenseOperator spin_hamiltonian() {
  const SpinMatrices m = spin_matrices(Spin::one);
  DenseOperator h(9);
  for (const DenseOperator* c : {&m.x, &m.y, &m.z}) h += tensor(*c, *c);
  return h;
}

DenseOperator local_flip(Spin s, Side side, double phase) {
  const std::size_t d = local_dim(s);
  DenseOperator m(d);
  const Complex up = std::exp(kI * phase);
  std::size_t from = 0, to = 0;
  if (s == Spin::half) {
    from = index_of(s, 1);
    to = index_of(s, -1);
  } else if (side == Side::A) {
    from = index_of(s, -1);
    to = index_of(s, 0);
    m(index_of(s, 1), index_of(s, 1)) = 1.0;
  } else {
    from = index_of(s, 1);
    to = index_of(s, 0);
    m(index_of(s, -1), index_of(s, -1)) = 1.0;
  }
  m(to, from) = up;
  m(from, to) = std::conj(up);
  return m;
}

DenseOperator flip_operator(Spin s, Side side, double phase) {
  const DenseOperator id = DenseOperator::identity(local_dim(s));
  const DenseOperator local = local_flip(s, side, phase);
  return side == Side::A ? tensor(local, id) : tensor(id, local);
}

ChshQuadruple quadruple(Spin s, const AngleSet& angles) {
  return {flip_operator(s, Side::A, angles.alpha1()), flip_operator(s, Side::A, angles.alpha2()),
          flip_operator(s, Side::B, angles.beta1()), flip_operator(s, Side::B, angles.beta2()),
          angles};
}

AngleSet spin_one_demo_angles() { return AngleSet(kPi / 2.0, 0.0, 3.0 * kPi / 4.0, 0.0); }

AngleSet tsirelson_angles() { return AngleSet(0.0, kPi / 2.0, kPi / 4.0, -kPi / 4.0); }

ClosedFormCorrelator spin_one_closed_form() {
  return {2.0 / 3.0, 1.0, {-1, -1, -1, 1}};
}

double spin_one_chsh_closed(const AngleSet& angles) { return spin_one_closed_form()(angles); }

double spin_half_pair_correlator(double alpha, double beta) { return -std::cos(alpha - beta); }

}  // namespace chsh::spin

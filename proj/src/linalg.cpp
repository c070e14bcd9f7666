#include "chsh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "chsh/error.hpp"

namespace chsh {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ShapeError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                     " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Ket::Ket(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw ShapeError("Ket: dimension must be positive");
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ShapeError("Ket::basis: index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return Ket(std::move(amps));
}

double Ket::norm() const {
  double sum = 0.0;
  for (const Complex& z : amps_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool Ket::is_normalized() const { return std::abs(norm() - 1.0) <= kStructuralTolerance; }

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("Ket::normalized: zero vector");
  std::vector<Complex> amps(amps_);
  for (Complex& z : amps) z /= n;
  return Ket(std::move(amps));
}

Complex inner(const Ket& u, const Ket& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) sum += std::conj(u[i]) * v[i];
  return sum;
}

Ket tensor(const Ket& u, const Ket& v) {
  std::vector<Complex> amps;
  amps.reserve(u.dim() * v.dim());
  for (const Complex& x : u.amplitudes()) {
    for (const Complex& y : v.amplitudes()) amps.push_back(x * y);
  }
  return Ket(std::move(amps));
}

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw ShapeError("DenseOperator: dimension must be positive");
}

DenseOperator::DenseOperator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw ShapeError("DenseOperator: dimension must be positive");
  if (entries_.size() != dim * dim) {
    throw ShapeError("DenseOperator: expected " + std::to_string(dim * dim) + " entries, got " +
                     std::to_string(entries_.size()));
  }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
  DenseOperator m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  require_same_dim(dim_, other.dim_, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& other) {
  require_same_dim(dim_, other.dim_, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

Complex DenseOperator::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double DenseOperator::hermiticity_deviation() const {
  double dev = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return dev;
}

bool DenseOperator::is_hermitian(double tol) const { return hermiticity_deviation() <= tol; }

bool DenseOperator::is_unitary(double tol) const {
  return max_abs_diff(adjoint(*this) * *this, identity(dim_)) <= tol;
}

DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
DenseOperator operator*(Complex scale, DenseOperator m) { return m *= scale; }

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator*");
  const std::size_t n = a.dim();
  DenseOperator out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Ket operator*(const DenseOperator& m, const Ket& v) {
  require_same_dim(m.dim(), v.dim(), "operator*(Ket)");
  const std::size_t n = m.dim();
  std::vector<Complex> out(n);
  // Column sweep: zero amplitudes of v (common for Fock-diagonal states) cost nothing.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vk = v[k];
    if (vk == Complex(0.0)) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += m(i, k) * vk;
  }
  return Ket(std::move(out));
}

Ket apply_adjoint(const DenseOperator& m, const Ket& v) {
  require_same_dim(m.dim(), v.dim(), "apply_adjoint");
  const std::size_t n = m.dim();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vk = v[k];
    if (vk == Complex(0.0)) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += std::conj(m(k, i)) * vk;
  }
  return Ket(std::move(out));
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b, std::size_t max_dim) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (nb != 0 && na > max_dim / nb) {
    throw CapacityError("tensor: product dimension " + std::to_string(na) + "x" +
                        std::to_string(nb) + " exceeds maximum " + std::to_string(max_dim));
  }
  DenseOperator out(na * nb);
  for (std::size_t ia = 0; ia < na; ++ia) {
    for (std::size_t ja = 0; ja < na; ++ja) {
      const Complex x = a(ia, ja);
      if (x == Complex(0.0)) continue;
      for (std::size_t ib = 0; ib < nb; ++ib) {
        for (std::size_t jb = 0; jb < nb; ++jb) out(ia * nb + ib, ja * nb + jb) = x * b(ib, jb);
      }
    }
  }
  return out;
}

DenseOperator adjoint(const DenseOperator& m) {
  const std::size_t n = m.dim();
  DenseOperator out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(c, r) = std::conj(m(r, c));
  }
  return out;
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  return a * b - b * a;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double dev = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) dev = std::max(dev, std::abs(ea[i] - eb[i]));
  return dev;
}

double max_abs(const DenseOperator& m) {
  double dev = 0.0;
  for (const Complex& z : m.entries()) dev = std::max(dev, std::abs(z));
  return dev;
}

Complex expectation(const Ket& psi, const DenseOperator& m) {
  require_same_dim(psi.dim(), m.dim(), "expectation");
  if (!psi.is_normalized()) throw DomainError("expectation: state is not normalized");
  return inner(psi, m * psi);
}

}  // namespace chsh

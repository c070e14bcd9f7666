#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace chsh {

using Complex = std::complex<double>;

/// Entrywise tolerance for structural checks (hermiticity, unitarity, norm).
inline constexpr double kStructuralTolerance = 1e-12;

/// Largest total dimension a tensor product may produce unless overridden.
inline constexpr std::size_t kDefaultMaxDim = 16384;

/// A complex state vector on an explicit finite-dimensional space.
class Ket {
 public:
  explicit Ket(std::vector<Complex> amplitudes);

  /// Basis vector e_index of the given dimension.
  static Ket basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  /// True when |‖ψ‖ − 1| ≤ kStructuralTolerance.
  bool is_normalized() const;
  /// Returns ψ/‖ψ‖. Throws DomainError on a zero vector.
  Ket normalized() const;

 private:
  std::vector<Complex> amps_;
};

/// ⟨u|v⟩, antilinear in the first argument.
Complex inner(const Ket& u, const Ket& v);

/// u ⊗ v with the left factor as the slow index.
Ket tensor(const Ket& u, const Ket& v);

/// Dense complex square matrix, row-major.
class DenseOperator {
 public:
  /// Zero matrix of the given dimension.
  explicit DenseOperator(std::size_t dim);
  /// Takes ownership of dim*dim row-major entries. Throws ShapeError otherwise.
  DenseOperator(std::size_t dim, std::vector<Complex> entries);

  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  DenseOperator& operator+=(const DenseOperator& other);
  DenseOperator& operator-=(const DenseOperator& other);
  DenseOperator& operator*=(Complex scale);

  Complex trace() const;

  /// max |M − M†| entrywise.
  double hermiticity_deviation() const;
  bool is_hermitian(double tol = kStructuralTolerance) const;
  /// max |U†U − I| entrywise ≤ tol.
  bool is_unitary(double tol = kStructuralTolerance) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

DenseOperator operator+(DenseOperator a, const DenseOperator& b);
DenseOperator operator-(DenseOperator a, const DenseOperator& b);
DenseOperator operator*(Complex scale, DenseOperator m);

/// Matrix product. Zero entries of the left factor are skipped, so the cost is
/// O(nnz(a)·dim), which keeps products of the sparse ladder and flip matrices cheap.
DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

/// Matrix-vector product.
Ket operator*(const DenseOperator& m, const Ket& v);

/// M†v without forming M†.
Ket apply_adjoint(const DenseOperator& m, const Ket& v);

/// Kronecker product a ⊗ b. Throws CapacityError if a.dim·b.dim > max_dim.
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b,
                     std::size_t max_dim = kDefaultMaxDim);

/// Conjugate transpose.
DenseOperator adjoint(const DenseOperator& m);

/// [a, b] = ab − ba.
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

/// max |a − b| entrywise. Throws ShapeError on dimension mismatch.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// max |m| entrywise.
double max_abs(const DenseOperator& m);

/// ⟨ψ|M|ψ⟩. Throws ShapeError on mismatch and DomainError if ψ is not normalized.
Complex expectation(const Ket& psi, const DenseOperator& m);

}  // namespace chsh

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qsslab {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions here never exceed 32,
/// so everything is stored inline in one vector and copied by value.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<Complex> row_major);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> values);
  /// |v><v| for an arbitrary (not necessarily normalized) vector.
  static Matrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Complex trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, Complex scale) { return lhs *= scale; }
  friend Matrix operator*(Complex scale, Matrix rhs) { return rhs *= scale; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest element-wise modulus of (a - b). Dimensions must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Largest element-wise modulus of (m - m^dagger).
double hermiticity_error(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; column i of `vectors` is the eigenvector for values[i].
struct HermitianEigen {
  std::vector<double> values;
  Matrix vectors;

  /// V diag(values) V^dagger.
  Matrix reconstruct() const;
};

/// Hermitian tolerance accepted by the eigensolver.
inline constexpr double kHermitianTolerance = 1e-10;

/// Cyclic complex Jacobi rotations. Throws DomainError if the input deviates
/// from Hermitian by more than kHermitianTolerance.
HermitianEigen eigen_hermitian(const Matrix& m);

std::vector<double> eigenvalues_hermitian(const Matrix& m);

/// Projector onto the span of eigenvectors whose eigenvalue exceeds `threshold`.
Matrix support_projector(const HermitianEigen& eig, double threshold);

/// f applied to the eigenvalues; eigenvalues at or below `threshold` map to 0.
/// Used for pseudo-inverse square roots restricted to the support.
template <typename F>
Matrix spectral_apply(const HermitianEigen& eig, double threshold, F&& f) {
  const std::size_t n = eig.vectors.dim();
  Matrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] <= threshold) continue;
    const double fk = f(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

}  // namespace qsslab

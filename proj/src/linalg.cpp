#include "qsslab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qsslab/errors.hpp"

namespace qsslab {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DomainError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()) + ")");
  }
}

double off_diagonal_norm2(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return sum;
}

double frobenius_norm2(const Matrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.data()) sum += std::norm(z);
  return sum;
}

constexpr int kMaxSweeps = 100;

}  // namespace

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) {
    throw DomainError("Matrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                      std::to_string(data_.size()));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) throw DomainError("Matrix::outer: length mismatch");
  Matrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other, "Matrix::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other, "Matrix::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs, "Matrix::operator*");
  const std::size_t n = lhs.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

double hermiticity_error(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  Matrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

Matrix HermitianEigen::reconstruct() const {
  return spectral_apply(*this, -std::numeric_limits<double>::infinity(),
                        [](double v) { return v; });
}

HermitianEigen eigen_hermitian(const Matrix& m) {
  const double herr = hermiticity_error(m);
  if (herr > kHermitianTolerance) {
    throw DomainError("eigen_hermitian: input is not Hermitian (deviation " +
                      std::to_string(herr) + ")");
  }
  const std::size_t n = m.dim();
  // Work on the exactly Hermitian part so rounding in the input cannot bias
  // the rotations.
  Matrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  Matrix v = Matrix::identity(n);

  const double scale2 = frobenius_norm2(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm2(a);
    if (off <= 1e-30 * scale2 || off < 1e-300) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase the q axis so the pivot becomes real, then apply a real
        // symmetric 2x2 rotation.  U = diag(1, e^{-i phi}) * R.
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex u_pp = c;
        const Complex u_pq = s;
        const Complex u_qp = -s * std::conj(phase);
        const Complex u_qq = c * std::conj(phase);

        // a <- a U
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        // a <- U^dagger a
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // v <- v U
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  HermitianEigen out{std::vector<double>(n), Matrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> eigenvalues_hermitian(const Matrix& m) { return eigen_hermitian(m).values; }

Matrix support_projector(const HermitianEigen& eig, double threshold) {
  return spectral_apply(eig, threshold, [](double) { return 1.0; });
}

}  // namespace qsslab

#include "entfid/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace entfid {

namespace {

void require_finite(const std::vector<Complex>& entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error("matrix entries must be finite (no NaN or infinity)");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw Error("matrix dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw Error("matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw Error("entry count does not match rows * cols");
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  if (r == 0) throw Error("matrix dimensions must be positive");
  const std::size_t c = rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error("all rows must have the same length");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::basis_column(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error("basis index out of range");
  ComplexMatrix v(dim, 1);
  v(index, 0) = 1.0;
  return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw Error("trace requires a square matrix");
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_residual() const {
  if (!is_square()) throw Error("hermiticity residual requires a square matrix");
  double r = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix addition dimension mismatch");
  ComplexMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix subtraction dimension mismatch");
  ComplexMatrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(const Complex& scale, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) out.entries_[k] = scale * m.entries_[k];
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("max_abs_diff dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

Complex dot(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows()) {
    throw Error("dot requires column vectors of equal length");
  }
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) sum += std::conj(x(i, 0)) * y(i, 0);
  return sum;
}

namespace {

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

// Rotate the global phase so the largest-magnitude component is real and
// positive; eigenvectors then come out the same regardless of pivot order.
void canonicalize_phase(ComplexMatrix& v) {
  std::size_t imax = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double mag = std::abs(v(i, 0));
    if (mag > best) {
      best = mag;
      imax = i;
    }
  }
  if (best == 0.0) return;
  const Complex phase = std::conj(v(imax, 0)) / best;
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) *= phase;
}

// Closed-form eigensystem of a 2x2 Hermitian matrix [[a, b], [conj(b), d]].
// Eigenvector candidates (b, lambda - a) and (lambda - d, conj(b)) both solve
// (M - lambda)v = 0; the larger-norm one is numerically safe. Mixed-form pairs
// stay exactly orthogonal because conj(b)*((l1 - a) + (l2 - d)) = 0.
HermitianEigensystem eigensystem_2x2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex b = h(0, 1);
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  const double l1 = mean + radius;
  const double l2 = mean - radius;

  HermitianEigensystem out;
  out.eigenvalues = {l1, l2};
  std::size_t fallback_index = 0;
  for (double lambda : out.eigenvalues) {
    ComplexMatrix v(2, 1);
    const Complex form1[2] = {b, Complex(lambda - a, 0.0)};
    const Complex form2[2] = {Complex(lambda - d, 0.0), std::conj(b)};
    const double n1 = std::hypot(std::abs(form1[0]), std::abs(form1[1]));
    const double n2 = std::hypot(std::abs(form2[0]), std::abs(form2[1]));
    if (n1 == 0.0 && n2 == 0.0) {
      // Scalar matrix: any orthonormal basis works.
      v(fallback_index, 0) = 1.0;
    } else if (n1 >= n2) {
      v(0, 0) = form1[0] / n1;
      v(1, 0) = form1[1] / n1;
    } else {
      v(0, 0) = form2[0] / n2;
      v(1, 0) = form2[1] / n2;
    }
    canonicalize_phase(v);
    out.eigenvectors.push_back(std::move(v));
    ++fallback_index;
  }
  return out;
}

double off_diagonal_frobenius(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) sum += std::norm(m(i, j));
  return std::sqrt(sum);
}

// Cyclic Jacobi for Hermitian matrices. Each rotation zeroes one off-diagonal
// pair; the accumulated unitary V holds the eigenvectors in its columns.
HermitianEigensystem eigensystem_jacobi(ComplexMatrix a) {
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr double kOffTol = 1e-12;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_frobenius(a) < kOffTol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;  // e^{i theta}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        // Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0.
        const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- U^dagger A U with U(p,p)=c, U(p,q)=-s*phase, U(q,p)=s*conj(phase), U(q,q)=c.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj + s * phase * aqj;
          a(q, j) = -s * std::conj(phase) * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip + s * std::conj(phase) * aiq;
          a(i, q) = -s * phase * aip + c * aiq;
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip + s * std::conj(phase) * viq;
          v(i, q) = -s * phase * vip + c * viq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
  }

  HermitianEigensystem out;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(a(idx, idx).real());
    ComplexMatrix col(n, 1);
    for (std::size_t i = 0; i < n; ++i) col(i, 0) = v(i, idx);
    canonicalize_phase(col);
    out.eigenvectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace

HermitianEigensystem hermitian_eigendecomposition(const ComplexMatrix& m, double hermiticity_tol) {
  if (!m.is_square()) throw Error("eigendecomposition requires a square matrix");
  if (m.hermiticity_residual() > hermiticity_tol) {
    throw Error("eigendecomposition requires a Hermitian matrix (residual above tolerance)");
  }
  const ComplexMatrix h = hermitian_part(m);
  if (h.rows() == 1) {
    HermitianEigensystem out;
    out.eigenvalues = {h(0, 0).real()};
    out.eigenvectors.push_back(ComplexMatrix::basis_column(1, 0));
    return out;
  }
  if (h.rows() == 2) return eigensystem_2x2(h);
  return eigensystem_jacobi(h);
}

bool is_positive_semidefinite(const ComplexMatrix& m, double tol) {
  const HermitianEigensystem eig = hermitian_eigendecomposition(m, tol);
  return eig.eigenvalues.back() >= -tol;
}

ComplexMatrix pauli_i() { return ComplexMatrix::identity(2); }

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

}  // namespace entfid

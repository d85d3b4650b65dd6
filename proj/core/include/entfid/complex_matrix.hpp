#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "entfid/error.hpp"

namespace entfid {

using Complex = std::complex<double>;

/// Dense row-major complex matrix, sized for the 2x2 and 4x4 work done here.
/// Public constructors reject non-finite entries; dimensions are dynamic and
/// checked at runtime. Values are immutable in spirit: operations return new
/// matrices and never mutate their arguments.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  /// d x 1 computational basis column vector e_index.
  static ComplexMatrix basis_column(std::size_t dim, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;  // throws on non-square input

  /// Largest entry magnitude.
  double max_abs() const;
  /// max_ij |m(i,j) - conj(m(j,i))|; zero for exactly Hermitian matrices.
  double hermiticity_residual() const;
  bool is_hermitian(double tol) const { return is_square() && hermiticity_residual() <= tol; }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const Complex& scale, const ComplexMatrix& m);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/// Kronecker product; dimensions (a.rows*b.rows) x (a.cols*b.cols).
/// Index convention: result(i*b.rows + k, j*b.cols + l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise |a - b|; dimensions must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// x^dagger y for column vectors of equal length.
Complex dot(const ComplexMatrix& x, const ComplexMatrix& y);

struct HermitianEigensystem {
  std::vector<double> eigenvalues;            // sorted descending
  std::vector<ComplexMatrix> eigenvectors;    // orthonormal column vectors, same order
};

/// Eigendecomposition of a Hermitian matrix. 2x2 inputs use the closed-form
/// quadratic; larger ones run cyclic Jacobi rotations (off-diagonal Frobenius
/// norm below 1e-12, at most 100 sweeps). Throws if the input deviates from
/// Hermitian by more than `hermiticity_tol` in max-entry norm.
HermitianEigensystem hermitian_eigendecomposition(const ComplexMatrix& m,
                                                  double hermiticity_tol = 1e-10);

/// True iff the minimum eigenvalue is >= -tol. Throws on non-Hermitian input
/// (same tolerance).
bool is_positive_semidefinite(const ComplexMatrix& m, double tol = 1e-10);

// The single-qubit operator basis used throughout.
ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace entfid

#pragma once

#include <cstddef>

#include "entfid/complex_matrix.hpp"

namespace entfid {

/// A validated quantum state: Hermitian, unit trace, and positive
/// semidefinite, each within 1e-10.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// Qubit state written as [[a, c], [conj(c), b]] with b = 1 - a. Constructing
/// invalid parameters (|c|^2 > a*b beyond 1e-12) throws: such a matrix is not
/// a state.
class QubitStateParams {
 public:
  QubitStateParams(double a, Complex c);

  double a() const { return a_; }
  double b() const { return 1.0 - a_; }
  Complex c() const { return c_; }

 private:
  double a_;
  Complex c_;
};

DensityOperator qubit_state(const QubitStateParams& params);

/// Pure state on reference (x) system whose reduced state on the system
/// factor is a given density operator. The reference dimension equals the
/// system dimension.
struct Purification {
  ComplexMatrix vector;       // d^2 x 1 column, unit norm
  std::size_t reference_dim;  // d
};

/// |Psi> = sum_i sqrt(lambda_i) |i>_R (x) |e_i> from the state's
/// eigendecomposition, eigenvalues descending, reference basis indexed in the
/// same order. Eigenvalues in [-1e-10, 0) are clamped to zero.
Purification purify(const DensityOperator& rho);

/// Traces out the first (reference) factor of a d^2 x d^2 matrix.
ComplexMatrix partial_trace_reference(const ComplexMatrix& m, std::size_t d);

}  // namespace entfid

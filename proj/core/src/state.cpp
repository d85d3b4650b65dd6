#include "entfid/state.hpp"

#include <cmath>
#include <utility>

namespace entfid {

namespace {
constexpr double kStateTol = 1e-10;
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw Error("density operator must be square");
  if (matrix_.hermiticity_residual() > kStateTol) {
    throw Error("density operator must be Hermitian within 1e-10");
  }
  if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > kStateTol) {
    throw Error("density operator must have unit trace within 1e-10");
  }
  if (!is_positive_semidefinite(matrix_, kStateTol)) {
    throw Error("density operator must be positive semidefinite within 1e-10");
  }
}

QubitStateParams::QubitStateParams(double a, Complex c) : a_(a), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw Error("state parameters must be finite");
  }
  if (a < 0.0 || a > 1.0) throw Error("state parameter a must lie in [0, 1]");
  if (std::norm(c) > a * (1.0 - a) + 1e-12) {
    throw Error("|c|^2 exceeds a*(1-a): not a positive semidefinite state");
  }
}

DensityOperator qubit_state(const QubitStateParams& params) {
  return DensityOperator(ComplexMatrix::from_rows({
      {Complex(params.a(), 0.0), params.c()},
      {std::conj(params.c()), Complex(params.b(), 0.0)},
  }));
}

Purification purify(const DensityOperator& rho) {
  const std::size_t d = rho.dim();
  const HermitianEigensystem eig = hermitian_eigendecomposition(rho.matrix());
  ComplexMatrix psi(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    double lambda = eig.eigenvalues[i];
    if (lambda < 0.0) lambda = 0.0;  // PSD slack from the state validation
    const double w = std::sqrt(lambda);
    for (std::size_t s = 0; s < d; ++s) {
      psi(i * d + s, 0) = w * eig.eigenvectors[i](s, 0);
    }
  }
  return Purification{std::move(psi), d};
}

ComplexMatrix partial_trace_reference(const ComplexMatrix& m, std::size_t d) {
  if (d == 0) throw Error("reference dimension must be positive");
  if (!m.is_square() || m.rows() != d * d) {
    throw Error("partial trace requires a square matrix of dimension d^2");
  }
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out(i, j) += m(r * d + i, r * d + j);
  return out;
}

}  // namespace entfid

#include "mpt/operator_matrix.hpp"

#include <stdexcept>

namespace mpt {

std::vector<StateLabel> ladder_basis(int nu, int dim) {
  std::vector<StateLabel> basis;
  basis.reserve(dim);
  for (int n = 0; n < dim; ++n) {
    basis.push_back(make_label(nu, n));
  }
  return basis;
}

OperatorMatrix make_operator(Matrix values, int nu, BasisKind kind) {
  if (values.rows() != values.cols()) {
    throw std::invalid_argument("make_operator: matrix must be square");
  }
  const int dim = static_cast<int>(values.rows());
  const int expected = kind == BasisKind::kFullSpin ? nu : (nu - 1) / 2;
  if (dim != expected) {
    throw std::invalid_argument("make_operator: dimension does not match the basis kind");
  }
  return OperatorMatrix{std::move(values), ladder_basis(nu, dim), kind};
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace mpt

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mpt/states.hpp"

namespace mpt {

using Matrix = Eigen::MatrixXd;

enum class BasisKind { kFullSpin, kPhysical };

/// Real dense operator over an ordered single-oscillator basis.
/// Entry (row, col) is <basis[row]| O |basis[col]>.
struct OperatorMatrix {
  Matrix values;
  std::vector<StateLabel> basis;
  BasisKind kind = BasisKind::kPhysical;

  int dim() const noexcept { return static_cast<int>(values.rows()); }
  double operator()(int row, int col) const { return values(row, col); }
};

/// Basis labels n = 0 .. dim-1 for representation parameter nu.
std::vector<StateLabel> ladder_basis(int nu, int dim);

OperatorMatrix make_operator(Matrix values, int nu, BasisKind kind);

double max_abs(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace mpt

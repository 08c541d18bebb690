#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mpt/operator_matrix.hpp"

namespace mpt {

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct Eigensystem {
  /// Ascending; degenerate values ordered by the basis index of the dominant component.
  std::vector<double> values;
  /// Column k is the unit eigenvector of values[k].
  Matrix vectors;
  /// Basis index of the largest |component| of each eigenvector.
  std::vector<int> dominant;
  int sweeps = 0;
};

inline constexpr double kSymmetryTolerance = 1e-9;

/// Cyclic Jacobi rotations on a symmetrized working copy. Throws std::domain_error when
/// |A - A^T| exceeds kSymmetryTolerance * max(1, |A|), NumericalError on non-finite input or no convergence.
Eigensystem jacobi_eigensystem(const Matrix& a);

}  // namespace mpt

#include "mpt/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mpt {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) {
        sum += a(i, j) * a(i, j);
      }
    }
  }
  return std::sqrt(sum);
}

}  // namespace

Eigensystem jacobi_eigensystem(const Matrix& input) {
  if (input.rows() != input.cols()) {
    throw std::domain_error("jacobi: matrix must be square");
  }
  if (!input.allFinite()) {
    throw NumericalError("jacobi: matrix has non-finite entries");
  }
  const Eigen::Index n = input.rows();
  const double scale = std::max(1.0, input.norm());
  if ((input - input.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
    throw std::domain_error("jacobi: matrix is not symmetric within tolerance");
  }

  Matrix a = 0.5 * (input + input.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double initial = off_diagonal_norm(a);
  const double target = 1e-12 * initial;

  Eigensystem result;
  constexpr int kMaxSweeps = 100;
  while (off_diagonal_norm(a) > target) {
    if (result.sweeps == kMaxSweeps) {
      throw NumericalError("jacobi: no convergence after 100 sweeps");
    }
    ++result.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) {
          continue;
        }
        // Rutishauser's rotation: t = sgn(theta)/(|theta| + sqrt(theta^2 + 1)).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> dominant(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index idx = 0;
    v.col(k).cwiseAbs().maxCoeff(&idx);
    dominant[k] = static_cast<int>(idx);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
  // Stable tie-break within degenerate clusters.
  const double tie = 1e-9 * scale;
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() && a(order[end], order[end]) - a(order[end - 1], order[end - 1]) <= tie) {
      ++end;
    }
    std::sort(order.begin() + begin, order.begin() + end, [&](int x, int y) { return dominant[x] < dominant[y]; });
    begin = end;
  }

  result.values.resize(n);
  result.vectors.resize(n, n);
  result.dominant.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]);
    result.vectors.col(k) = v.col(order[k]);
    result.dominant[k] = dominant[order[k]];
  }
  return result;
}

}  // namespace mpt

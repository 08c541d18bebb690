#include "mpt/su2_ladder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mpt/specfun.hpp"

namespace mpt::su2 {

namespace {

void require_level(int nu, int n) {
  if (n < 0 || n > nu - 1) {
    throw std::domain_error("ladder coefficient: n = " + std::to_string(n) + " outside [0, nu-1]");
  }
}

int physical_dim(int nu) { return (nu - 1) / 2; }

}  // namespace

void require_odd_nu(int nu) {
  if (nu < 3 || nu % 2 == 0) {
    throw std::domain_error("nu must be an odd integer >= 3 (got " + std::to_string(nu) + ")");
  }
}

double lowering_coefficient(int nu, int n) {
  require_level(nu, n);
  return std::sqrt(static_cast<double>(n) * (nu - n));
}

double raising_coefficient(int nu, int n) {
  require_level(nu, n);
  return std::sqrt((n + 1.0) * (nu - n - 1.0));
}

LadderTriple build_su2_matrices(int nu) {
  require_odd_nu(nu);
  Matrix plus = Matrix::Zero(nu, nu);
  Matrix minus = Matrix::Zero(nu, nu);
  Matrix zero = Matrix::Zero(nu, nu);
  for (int n = 0; n < nu; ++n) {
    if (n + 1 < nu) {
      plus(n + 1, n) = raising_coefficient(nu, n);
    }
    if (n > 0) {
      minus(n - 1, n) = lowering_coefficient(nu, n);
    }
    zero(n, n) = n - (nu - 1) / 2.0;
  }
  return LadderTriple{make_operator(std::move(plus), nu, BasisKind::kFullSpin),
                      make_operator(std::move(minus), nu, BasisKind::kFullSpin),
                      make_operator(std::move(zero), nu, BasisKind::kFullSpin), nu, (nu - 1) / 2.0};
}

LadderTriple project_physical(const LadderTriple& triple) {
  if (triple.plus.kind == BasisKind::kPhysical) {
    return triple;
  }
  const int d = physical_dim(triple.nu);
  auto cut = [&](const OperatorMatrix& m) {
    return make_operator(m.values.topLeftCorner(d, d), triple.nu, BasisKind::kPhysical);
  };
  return LadderTriple{cut(triple.plus), cut(triple.minus), cut(triple.zero), triple.nu, triple.j};
}

OperatorMatrix casimir(const LadderTriple& triple) {
  if (triple.plus.kind != BasisKind::kFullSpin) {
    throw std::domain_error("casimir: the Casimir identity needs the full spin-j representation");
  }
  const Matrix& p0 = triple.zero.values;
  const Matrix& pp = triple.plus.values;
  const Matrix& pm = triple.minus.values;
  Matrix c = p0 * p0 + 0.5 * (pp * pm + pm * pp);
  return make_operator(std::move(c), triple.nu, BasisKind::kFullSpin);
}

OperatorMatrix hamiltonian_diagonal(const PotentialSpec& spec) {
  const int q = require_integer_q(spec);
  const int nu = 2 * q + 1;
  const double hbar = spec.hbar();
  // The frequency scale uses the range parameter alpha.
  const double omega = hbar * spec.alpha() * spec.alpha() * nu / (2.0 * spec.mu());
  const double prefactor = hbar * omega / nu;
  Matrix h = Matrix::Zero(q, q);
  for (int n = 0; n < q; ++n) {
    const double m = n - (nu - 1) / 2.0;
    h(n, n) = -prefactor * m * m;
  }
  return make_operator(std::move(h), nu, BasisKind::kPhysical);
}

double normalization_chain(int nu, int n) {
  require_odd_nu(nu);
  if (n < 0 || n > (nu - 3) / 2) {
    throw std::domain_error("normalization_chain: n outside the physical branch");
  }
  using specfun::log_gamma;
  return std::exp(0.5 * (log_gamma(nu - n) - log_gamma(n + 1.0) - log_gamma(nu)));
}

OperatorMatrix sinh_matrix(int nu) {
  require_odd_nu(nu);
  const int d = physical_dim(nu);
  Matrix s = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    if (n >= 1) {
      s(n - 1, n) = std::sqrt(static_cast<double>(n) * (nu - n) / ((nu - 2.0 * n - 1.0) * (nu - 2.0 * n + 1.0)));
    }
    // Transitions into the epsilon = 0 level are never materialized.
    if (n + 1 < d) {
      s(n + 1, n) = std::sqrt((n + 1.0) * (nu - n - 1.0) / ((nu - 2.0 * n - 1.0) * (nu - 2.0 * n - 3.0)));
    }
  }
  return make_operator(std::move(s), nu, BasisKind::kPhysical);
}

OperatorMatrix cosh_ddx_matrix(int nu) {
  require_odd_nu(nu);
  const int d = physical_dim(nu);
  Matrix m = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    if (n >= 1) {
      m(n - 1, n) = 0.5 * std::sqrt(static_cast<double>(n) * (nu - n) * (nu - 2.0 * n - 1.0) / (nu - 2.0 * n + 1.0));
    }
    if (n + 1 < d) {
      m(n + 1, n) = -0.5 * std::sqrt((n + 1.0) * (nu - n - 1.0) * (nu - 2.0 * n - 1.0) / (nu - 2.0 * n - 3.0));
    }
  }
  return make_operator(std::move(m), nu, BasisKind::kPhysical);
}

double lowering_action(const PotentialSpec& spec, int n, double x) {
  const BoundState state(spec, n);
  const double eps = state.epsilon();
  const double a = spec.alpha();
  const double bracket = std::cosh(a * x) / a * state.derivative(x) + eps * std::sinh(a * x) * state.value(x);
  return std::sqrt((eps + 1.0) / eps) * bracket;
}

double raising_action(const PotentialSpec& spec, int n, double x) {
  const BoundState state(spec, n);
  const double eps = state.epsilon();
  const double a = spec.alpha();
  // sqrt((eps-1)/eps) closes the channel at the last bound state (eps = 1).
  const double scale = std::sqrt(std::max(eps - 1.0, 0.0) / eps);
  if (scale == 0.0) {
    return 0.0;
  }
  const double bracket = -std::cosh(a * x) / a * state.derivative(x) + eps * std::sinh(a * x) * state.value(x);
  return scale * bracket;
}

}  // namespace mpt::su2

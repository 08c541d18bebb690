#include "mpt/expansion.hpp"

#include <cmath>

#include "mpt/su2_ladder.hpp"

namespace mpt::expansion {

namespace {

int physical_dim(int nu) { return (nu - 1) / 2; }

double epsilon_of(int nu, int n) { return (nu - 2.0 * n - 1.0) / 2.0; }

void require_physical(int nu, int n) {
  su2::require_odd_nu(nu);
  if (n < 0 || n >= physical_dim(nu)) {
    throw std::domain_error("n = " + std::to_string(n) + " is not on the physical branch");
  }
}

void require_interior(int nu) {
  su2::require_odd_nu(nu);
  if (nu < 7) {
    throw std::domain_error("expansion needs nu >= 7 (at least one interior state)");
  }
}

struct Ladders {
  Matrix raise;
  Matrix lower;
};

Ladders scaled_ladders(int nu) {
  const auto physical = su2::project_physical(su2::build_su2_matrices(nu));
  const double s = 1.0 / std::sqrt(static_cast<double>(nu));
  return {physical.plus.values * s, physical.minus.values * s};
}

}  // namespace

BosonPair renormalized_generators(int nu) {
  su2::require_odd_nu(nu);
  auto [raise, lower] = scaled_ladders(nu);
  return BosonPair{make_operator(std::move(raise), nu, BasisKind::kPhysical),
                   make_operator(std::move(lower), nu, BasisKind::kPhysical), nu, BosonKind::kRenormalizedSu2};
}

double coeff(int nu, int n, CoeffKind which) {
  require_physical(nu, n);
  const double e = epsilon_of(nu, n);
  switch (which) {
    case CoeffKind::kF:
    case CoeffKind::kH:
      if (!(e > 1.0)) {
        throw EdgeStateError("edge state: raising channel closed (epsilon = 1)");
      }
      return which == CoeffKind::kF ? std::sqrt(nu / (e * (e - 1.0))) : std::sqrt(nu * e / (e - 1.0));
    case CoeffKind::kG:
      return std::sqrt(nu / (e * (e + 1.0)));
    case CoeffKind::kQ:
      return std::sqrt(nu * e / (e + 1.0));
  }
  return 0.0;
}

Matrix coeff_diagonal(int nu, CoeffKind which) {
  const int d = physical_dim(nu);
  Matrix m = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    try {
      m(n, n) = coeff(nu, n, which);
    } catch (const EdgeStateError&) {
      m(n, n) = 0.0;
    }
  }
  return m;
}

OperatorMatrix x_matrix_expansion(int nu, double alpha, int order) {
  require_interior(nu);
  if (order != 1 && order != 3 && order != 5) {
    throw std::domain_error("x expansion order must be 1, 3 or 5");
  }
  const auto [raise, lower] = scaled_ladders(nu);
  // Coefficients act on the incoming state: b^dagger f_n -> B^dagger F.
  const Matrix t = 0.5 * (raise * coeff_diagonal(nu, CoeffKind::kF) + lower * coeff_diagonal(nu, CoeffKind::kG));
  Matrix series = t;
  if (order >= 3) {
    const Matrix t3 = t * t * t;
    series -= t3 / 6.0;
    if (order >= 5) {
      series += 3.0 * (t3 * t * t) / 40.0;
    }
  }
  return make_operator(series / alpha, nu, BasisKind::kPhysical);
}

OperatorMatrix p_matrix_expansion(int nu, double alpha, int order, MomentumSigns signs) {
  require_interior(nu);
  if (order != 1 && order != 3) {
    throw std::domain_error("p expansion order must be 1 or 3");
  }
  const auto [raise, lower] = scaled_ladders(nu);
  const Matrix bf = raise * coeff_diagonal(nu, CoeffKind::kF);
  const Matrix bg = lower * coeff_diagonal(nu, CoeffKind::kG);
  const Matrix bh = raise * coeff_diagonal(nu, CoeffKind::kH);
  const Matrix bq = lower * coeff_diagonal(nu, CoeffKind::kQ);

  // p = (i hbar alpha/2)(BH - BQ) + ...  and p = -i hbar R.
  Matrix r = -0.5 * alpha * (bh - bq);
  if (order == 3) {
    const Matrix pair_sum = (bf + bg) * (bf + bg);
    Matrix bracket = pair_sum * (bh - bq);
    if (signs == MomentumSigns::kAsPrinted) {
      // The displayed final term is bg bg bq with a plus sign.
      bracket += 2.0 * bg * bg * bq;
    }
    // Displayed: + (i hbar alpha/16) bracket  ->  R -= alpha/16 bracket.
    const double sign = signs == MomentumSigns::kSechConsistent ? 1.0 : -1.0;
    r += sign * alpha / 16.0 * bracket;
  }
  return make_operator(std::move(r), nu, BasisKind::kPhysical);
}

double zeta(int nu, int n) {
  require_physical(nu, n);
  const double a = 1.0 - (2.0 * n + 1.0) / nu;
  const double c = 1.0 - (2.0 * n - 1.0) / nu;
  return 0.5 * (std::sqrt(1.0 / (a * c)) - std::sqrt(a / c));
}

ZZeta z_zeta(int nu, int n) {
  require_physical(nu, n);
  const double a = 1.0 - (2.0 * n + 1.0) / nu;
  const double b = 1.0 - (2.0 * n + 3.0) / nu;
  if (!(b > 0.0)) {
    throw EdgeStateError("z_n diverges at the last bound state n = n_max");
  }
  return ZZeta{0.5 * (std::sqrt(1.0 / (a * b)) + std::sqrt(a / b)), zeta(nu, n)};
}

BosonPair approx_c_ops(int nu) {
  require_interior(nu);
  const int d = physical_dim(nu);
  Matrix z = Matrix::Zero(d, d);
  Matrix zt = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    zt(n, n) = zeta(nu, n);
    // At n_max the raising channel leaves the bound space; only zeta contributes.
    if (n + 1 < d) {
      z(n, n) = z_zeta(nu, n).z;
    }
  }
  const auto [raise, lower] = scaled_ladders(nu);
  Matrix create = raise * z + lower * zt;
  Matrix annihilate = create.transpose();
  return BosonPair{make_operator(std::move(create), nu, BasisKind::kPhysical),
                   make_operator(std::move(annihilate), nu, BasisKind::kPhysical), nu, BosonKind::kApproxC};
}

double omega_tilde(const PotentialSpec& spec) {
  return spec.alpha() * spec.alpha() * spec.hbar() / spec.mu() * well_numbers(spec).k;
}

BosonPair physical_c_ops(const PotentialSpec& spec, const oracle::OracleConfig& cfg) {
  const int q = require_integer_q(spec);
  const int nu = 2 * q + 1;
  const double w = omega_tilde(spec);
  const double pos_scale = std::sqrt(spec.mu() * w / (2.0 * spec.hbar()));
  const double mom_scale = std::sqrt(spec.hbar() / (2.0 * spec.mu() * w));
  const Matrix x = oracle::observable_matrix(spec, oracle::Observable::position_x(), cfg).values;
  const Matrix r = oracle::derivative_matrix(spec, cfg).values;
  Matrix create = pos_scale * x - mom_scale * r;
  Matrix annihilate = pos_scale * x + mom_scale * r;
  return BosonPair{make_operator(std::move(create), nu, BasisKind::kPhysical),
                   make_operator(std::move(annihilate), nu, BasisKind::kPhysical), nu, BosonKind::kPhysicalC};
}

}  // namespace mpt::expansion

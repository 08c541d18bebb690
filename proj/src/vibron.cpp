#include "mpt/vibron.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mpt/expansion.hpp"
#include "mpt/su2_ladder.hpp"

namespace mpt::vibron {

namespace {

TwoOscMatrix from_kron_sum(const Matrix& a1, const Matrix& b2, const Matrix& a2, const Matrix& b1, double scale) {
  const int d = static_cast<int>(a1.rows());
  return TwoOscMatrix{scale * (kron(a1, b2) + kron(a2, b1)), make_basis(d)};
}

void require_same_single_dim(const TwoOscBasis& basis, int dim, const char* who) {
  if (basis.dim_single != dim) {
    throw std::domain_error(std::string(who) + ": basis dimension " + std::to_string(basis.dim_single) +
                            " does not match the bound-state count " + std::to_string(dim));
  }
}

}  // namespace

TwoOscBasis make_basis(int dim_single) {
  if (dim_single < 1) {
    throw std::domain_error("make_basis: dim_single must be positive");
  }
  TwoOscBasis basis;
  basis.dim_single = dim_single;
  basis.pairs.reserve(static_cast<std::size_t>(dim_single) * dim_single);
  for (int n1 = 0; n1 < dim_single; ++n1) {
    for (int n2 = 0; n2 < dim_single; ++n2) {
      basis.pairs.emplace_back(n1, n2);
    }
  }
  return basis;
}

SpectroParams spectro_from_potential(const PotentialSpec& spec) {
  return SpectroParams{spec.hbar() * expansion::omega_tilde(spec), spec.energy_scale()};
}

VibronParams vibron_params_from_spectro(const SpectroParams& sp, double lambda) {
  if (!(sp.omega_e > 0.0) || !(sp.xe_omega_e > 0.0)) {
    throw std::domain_error("spectroscopic constants must be positive");
  }
  const double n_real = sp.omega_e / sp.xe_omega_e - 1.0;
  const double nearest = std::round(n_real);
  if (nearest < 1.0 || std::fabs(n_real - nearest) > 1e-9) {
    throw std::domain_error("well is not su(2)-compatible: N = " + std::to_string(n_real));
  }
  const int n = static_cast<int>(nearest);
  return VibronParams{n, n * sp.xe_omega_e, lambda};
}

SpectroParams spectro_from_vibron(const VibronParams& vp) {
  return SpectroParams{vp.hbar_omega0 * (vp.N + 1.0) / vp.N, vp.hbar_omega0 / vp.N};
}

TwoOscMatrix h_su2_matrix(const VibronParams& vp, const TwoOscBasis& basis, EnergyOrigin origin) {
  if (vp.N < 2 || basis.dim_single > vp.N / 2) {
    throw std::domain_error("h_su2_matrix: basis exceeds the N/2 bound states of the representation");
  }
  const int d = basis.dim_single;
  const int nu = vp.N + 1;
  const double w = vp.hbar_omega0;
  const double shift = origin == EnergyOrigin::kDissociation ? w * (vp.N + 2.0) / 4.0 : 0.0;

  std::vector<double> one_body(d);
  for (int n = 0; n < d; ++n) {
    const double lower = su2::lowering_coefficient(nu, n);
    const double raise = su2::raising_coefficient(nu, n);
    one_body[n] = w / (2.0 * vp.N) * (lower * lower + raise * raise) - shift;
  }

  Matrix h = Matrix::Zero(basis.size(), basis.size());
  for (int n1 = 0; n1 < d; ++n1) {
    for (int n2 = 0; n2 < d; ++n2) {
      const int src = basis.index(n1, n2);
      h(src, src) = one_body[n1] + one_body[n2];
      // <n1+1, n2-1| b1^dagger b2 |n1, n2> and its transpose.
      if (n1 + 1 < d && n2 >= 1) {
        const double element =
            vp.lambda * w * su2::raising_coefficient(nu, n1) * su2::lowering_coefficient(nu, n2) / vp.N;
        const int dst = basis.index(n1 + 1, n2 - 1);
        h(dst, src) = element;
        h(src, dst) = element;
      }
    }
  }
  return TwoOscMatrix{std::move(h), basis};
}

TwoOscMatrix mpt_diagonal(const PotentialSpec& spec, const TwoOscBasis& basis) {
  require_same_single_dim(basis, well_numbers(spec).bound_count(), "mpt_diagonal");
  Matrix h = Matrix::Zero(basis.size(), basis.size());
  for (int k = 0; k < basis.size(); ++k) {
    h(k, k) = energy(spec, basis.pairs[k].first) + energy(spec, basis.pairs[k].second);
  }
  return TwoOscMatrix{std::move(h), basis};
}

TwoOscMatrix h_mpt_exact_interaction(const PotentialSpec& spec, const TwoOscBasis& basis, double lambda,
                                     const oracle::OracleConfig& cfg) {
  const int q = require_integer_q(spec);
  require_same_single_dim(basis, q, "h_mpt_exact_interaction");
  const Matrix x = oracle::observable_matrix(spec, oracle::Observable::position_x(), cfg).values;
  const Matrix r = oracle::derivative_matrix(spec, cfg).values;
  const double w = expansion::omega_tilde(spec);
  const double hbar = spec.hbar();
  const double mu = spec.mu();
  // p1 p2 = (-i hbar)^2 R (x) R.
  Matrix h = lambda * (-(hbar * hbar / mu) * kron(r, r) + mu * w * w * kron(x, x));
  return TwoOscMatrix{std::move(h), basis};
}

TwoOscMatrix h_interaction_from_coeffs(int nu, double lambda, double omega_tilde, double hbar,
                                       const std::vector<double>& z, const std::vector<double>& zeta) {
  const auto b = expansion::renormalized_generators(nu);
  const int d = b.create.dim();
  if (static_cast<int>(z.size()) != d || static_cast<int>(zeta.size()) != d) {
    throw std::domain_error("h_interaction_from_coeffs: one z and zeta value per physical state");
  }
  Matrix zd = Matrix::Zero(d, d);
  Matrix zetad = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) {
    zd(n, n) = z[n];
    zetad(n, n) = zeta[n];
  }
  const Matrix create = b.create.values * zd + b.annihilate.values * zetad;
  const Matrix annihilate = create.transpose();
  return from_kron_sum(create, annihilate, annihilate, create, lambda * hbar * omega_tilde);
}

TwoOscMatrix h_mpt_approx_interaction(int nu, double lambda, double omega_tilde, double hbar, ApproxLevel level) {
  su2::require_odd_nu(nu);
  if (nu < 7) {
    throw std::domain_error("h_mpt_approx_interaction needs nu >= 7");
  }
  if (level == ApproxLevel::kCrude) {
    const auto b = expansion::renormalized_generators(nu);
    return from_kron_sum(b.create.values, b.annihilate.values, b.annihilate.values, b.create.values,
                         lambda * hbar * omega_tilde);
  }
  const auto c = expansion::approx_c_ops(nu);
  return from_kron_sum(c.create.values, c.annihilate.values, c.annihilate.values, c.create.values,
                       lambda * hbar * omega_tilde);
}

TwoOscMatrix h_harmonic_model(const PotentialSpec& spec, const TwoOscBasis& basis, double lambda) {
  const double hw = spec.hbar() * expansion::omega_tilde(spec);
  const int d = basis.dim_single;
  Matrix h = Matrix::Zero(basis.size(), basis.size());
  for (int n1 = 0; n1 < d; ++n1) {
    for (int n2 = 0; n2 < d; ++n2) {
      const int src = basis.index(n1, n2);
      h(src, src) = -2.0 * spec.depth() + hw * (n1 + n2 + 1.0);
      if (n1 + 1 < d && n2 >= 1) {
        const int dst = basis.index(n1 + 1, n2 - 1);
        const double element = lambda * hw * std::sqrt(n2 * (n1 + 1.0));
        h(dst, src) = element;
        h(src, dst) = element;
      }
    }
  }
  return TwoOscMatrix{std::move(h), basis};
}

Matrix polyad_operator(const TwoOscBasis& basis) {
  Matrix p = Matrix::Zero(basis.size(), basis.size());
  for (int k = 0; k < basis.size(); ++k) {
    p(k, k) = basis.polyad(k);
  }
  return p;
}

double polyad_leakage(const TwoOscMatrix& h, int source_polyad) {
  double sum = 0.0;
  for (int col = 0; col < h.basis.size(); ++col) {
    if (source_polyad >= 0 && h.basis.polyad(col) != source_polyad) {
      continue;
    }
    for (int row = 0; row < h.basis.size(); ++row) {
      if (h.basis.polyad(row) != h.basis.polyad(col)) {
        sum += h.values(row, col) * h.values(row, col);
      }
    }
  }
  return std::sqrt(sum);
}

Matrix exchange_conjugate(const TwoOscMatrix& h) {
  const int size = h.basis.size();
  std::vector<int> swapped(size);
  for (int k = 0; k < size; ++k) {
    swapped[k] = h.basis.index(h.basis.pairs[k].second, h.basis.pairs[k].first);
  }
  Matrix out(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      out(i, j) = h.values(swapped[i], swapped[j]);
    }
  }
  return out;
}

std::vector<double> spectrum(const Matrix& m) { return jacobi_eigensystem(m).values; }

ComparisonReport compare_models(const PotentialSpec& spec, double lambda, const oracle::OracleConfig& cfg) {
  const int q = require_integer_q(spec);
  if (q < 3) {
    throw std::domain_error("compare_models needs an integer q >= 3");
  }
  const int nu = 2 * q + 1;
  const TwoOscBasis basis = make_basis(q);
  const double w = expansion::omega_tilde(spec);
  const double hbar = spec.hbar();

  const VibronParams vp = vibron_params_from_spectro(spectro_from_potential(spec), lambda);
  const Matrix diagonal = mpt_diagonal(spec, basis).values;
  const Matrix su2_h = h_su2_matrix(vp, basis, EnergyOrigin::kDissociation).values;
  const Matrix exact_h = diagonal + h_mpt_exact_interaction(spec, basis, lambda, cfg).values;
  const Matrix crude_h = diagonal + h_mpt_approx_interaction(nu, lambda, w, hbar, ApproxLevel::kCrude).values;
  const Matrix zeta_h = diagonal + h_mpt_approx_interaction(nu, lambda, w, hbar, ApproxLevel::kZetaCorrected).values;

  const Eigensystem exact = jacobi_eigensystem(exact_h);
  const auto su2_values = spectrum(su2_h);
  const auto crude_values = spectrum(crude_h);
  const auto zeta_values = spectrum(zeta_h);

  ComparisonReport report;
  report.lambda = lambda;
  report.nu = nu;
  for (int k = 0; k < basis.size(); ++k) {
    ComparisonRow row;
    row.index = k;
    row.su2 = su2_values[k];
    row.exact = exact.values[k];
    row.crude = crude_values[k];
    row.zeta = zeta_values[k];
    row.n1 = basis.pairs[exact.dominant[k]].first;
    row.n2 = basis.pairs[exact.dominant[k]].second;
    row.polyad = row.n1 + row.n2;

    const double d_su2 = std::fabs(row.su2 - row.exact);
    const double d_crude = std::fabs(row.crude - row.exact);
    const double d_zeta = std::fabs(row.zeta - row.exact);
    report.max_dev_su2 = std::max(report.max_dev_su2, d_su2);
    report.max_dev_crude = std::max(report.max_dev_crude, d_crude);
    report.max_dev_zeta = std::max(report.max_dev_zeta, d_zeta);
    if (row.polyad <= kLowPolyad) {
      report.low_polyad_dev_su2 = std::max(report.low_polyad_dev_su2, d_su2);
      report.low_polyad_dev_crude = std::max(report.low_polyad_dev_crude, d_crude);
      report.low_polyad_dev_zeta = std::max(report.low_polyad_dev_zeta, d_zeta);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace mpt::vibron

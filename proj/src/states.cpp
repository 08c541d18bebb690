#include "mpt/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mpt/specfun.hpp"

namespace mpt {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require_bound(const PotentialSpec& spec, int n) {
  const WellNumbers w = well_numbers(spec);
  if (n < 0 || !w.n_max || n > *w.n_max) {
    throw std::domain_error("n = " + std::to_string(n) + " is not a bound state of this well");
  }
}

}  // namespace

PotentialSpec::PotentialSpec(double depth, double alpha, double mu, double hbar)
    : depth_(depth), alpha_(alpha), mu_(mu), hbar_(hbar) {
  if (!positive_finite(depth) || !positive_finite(alpha) || !positive_finite(mu) || !positive_finite(hbar)) {
    throw std::domain_error("PotentialSpec: D, alpha, mu and hbar must be positive and finite");
  }
}

PotentialSpec PotentialSpec::for_integer_q(int q, double alpha, double mu, double hbar) {
  return PotentialSpec(depth_for_integer_q(q, alpha, mu, hbar), alpha, mu, hbar);
}

WellNumbers well_numbers(const PotentialSpec& spec) {
  WellNumbers w;
  const double a = spec.alpha() * spec.hbar();
  w.k = std::sqrt(0.25 + 2.0 * spec.mu() * spec.depth() / (a * a));
  w.q = (-1.0 + 2.0 * w.k) / 2.0;
  w.nu = 2.0 * w.k;

  const double nearest = std::round(w.q);
  if (std::fabs(w.q - nearest) < kIntegerTolerance) {
    w.integer_q = static_cast<int>(nearest);
    // Snap so energies and labels carry the exact integer rather than the sqrt roundoff.
    w.q = nearest;
    w.k = nearest + 0.5;
    w.nu = 2.0 * nearest + 1.0;
    // The epsilon = 0 state is not normalizable.
    if (*w.integer_q >= 1) {
      w.n_max = *w.integer_q - 1;
    }
  } else if (w.q > 0.0) {
    w.n_max = static_cast<int>(std::ceil(w.q)) - 1;
  }
  return w;
}

int require_integer_q(const PotentialSpec& spec) {
  const WellNumbers w = well_numbers(spec);
  if (!w.integer_q || *w.integer_q < 1) {
    throw std::domain_error("the su(2) representation requires an integer q >= 1 (q = " + std::to_string(w.q) + ")");
  }
  return *w.integer_q;
}

double depth_for_integer_q(int q, double alpha, double mu, double hbar) {
  if (q < 1) {
    throw std::domain_error("depth_for_integer_q: q must be at least 1");
  }
  return q * (q + 1.0) * alpha * alpha * hbar * hbar / (2.0 * mu);
}

StateLabel make_label(double nu, int n) {
  StateLabel s;
  s.nu = nu;
  s.n = n;
  s.epsilon = (nu - 2.0 * n - 1.0) / 2.0;
  s.j = (nu - 1.0) / 2.0;
  s.m = n - (nu - 1.0) / 2.0;
  return s;
}

StateLabel state_label(const PotentialSpec& spec, int n) {
  require_bound(spec, n);
  const WellNumbers w = well_numbers(spec);
  StateLabel s = make_label(w.nu, n);
  s.epsilon = w.q - n;
  return s;
}

double energy(const PotentialSpec& spec, int n) {
  require_bound(spec, n);
  const double eps = well_numbers(spec).q - n;
  return -spec.energy_scale() * eps * eps;
}

double normalization_constant(double q, int n, double alpha) {
  if (n < 0) {
    throw std::domain_error("normalization_constant: n must be non-negative");
  }
  if (!(q - n > 0.0)) {
    throw std::domain_error("normalization_constant: q - n must be positive (state beyond dissociation)");
  }
  using specfun::log_gamma;
  const double log_n2 = std::log(alpha) + log_gamma(n + 1.0) + log_gamma(q - n + 0.5) + log_gamma(2.0 * q - 2.0 * n + 1.0) -
                        0.5 * std::log(std::numbers::pi) - log_gamma(q - n) - log_gamma(2.0 * q - n + 1.0);
  return std::exp(0.5 * log_n2);
}

double log_cosh(double y) {
  const double a = std::fabs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

BoundState::BoundState(const PotentialSpec& spec, int n) : alpha_(spec.alpha()), n_(n) {
  require_bound(spec, n);
  const double q = well_numbers(spec).q;
  epsilon_ = q - n;
  lambda_ = q + 0.5 - n;
  norm_ = normalization_constant(q, n, alpha_);
}

double BoundState::value(double x) const {
  const double y = alpha_ * x;
  const double u = std::tanh(y);
  return norm_ * std::exp(-epsilon_ * log_cosh(y)) * specfun::gegenbauer(n_, lambda_, u);
}

double BoundState::derivative(double x) const {
  // dPsi/dx = alpha (1 - u^2) dPsi/du, with 1 - u^2 = sech^2.
  const double y = alpha_ * x;
  const double u = std::tanh(y);
  const double sech = 1.0 / std::cosh(y);
  const double c = specfun::gegenbauer(n_, lambda_, u);
  const double dc = specfun::gegenbauer_derivative(n_, lambda_, u);
  return alpha_ * norm_ * std::exp(-epsilon_ * log_cosh(y)) * (-epsilon_ * u * c + sech * sech * dc);
}

double BoundState::envelope() const {
  // |C_n^lambda(u)| <= C_n^lambda(1) for lambda > 0 and |u| <= 1.
  return norm_ * std::fabs(specfun::gegenbauer(n_, lambda_, 1.0));
}

double wavefunction(const PotentialSpec& spec, int n, double x) { return BoundState(spec, n).value(x); }

double wavefunction_derivative(const PotentialSpec& spec, int n, double x) { return BoundState(spec, n).derivative(x); }

}  // namespace mpt

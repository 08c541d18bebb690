#pragma once

#include <optional>

namespace mpt {

/// Physical parameters of one modified Poschl-Teller well V(x) = -D / cosh^2(alpha x).
class PotentialSpec {
 public:
  /// Throws std::domain_error unless every parameter is strictly positive and finite.
  PotentialSpec(double depth, double alpha, double mu, double hbar = 1.0);

  /// Well with integer q in the given units: D = q(q+1) alpha^2 hbar^2 / (2 mu).
  static PotentialSpec for_integer_q(int q, double alpha = 1.0, double mu = 1.0, double hbar = 1.0);

  double depth() const noexcept { return depth_; }
  double alpha() const noexcept { return alpha_; }
  double mu() const noexcept { return mu_; }
  double hbar() const noexcept { return hbar_; }

  /// alpha^2 hbar^2 / (2 mu), the energy scale of the well.
  double energy_scale() const noexcept { return alpha_ * alpha_ * hbar_ * hbar_ / (2.0 * mu_); }

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;

 private:
  double depth_;
  double alpha_;
  double mu_;
  double hbar_;
};

struct WellNumbers {
  double k = 0.0;
  double q = 0.0;
  double nu = 0.0;
  /// Highest bound-state index; empty when the well binds nothing.
  std::optional<int> n_max;
  /// Set when q lies within the integer-detection tolerance of an integer; k, q and nu are then snapped.
  std::optional<int> integer_q;

  int bound_count() const noexcept { return n_max ? *n_max + 1 : 0; }
};

inline constexpr double kIntegerTolerance = 1e-9;

struct StateLabel {
  double nu = 0.0;
  int n = 0;
  double epsilon = 0.0;
  double j = 0.0;
  double m = 0.0;

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

WellNumbers well_numbers(const PotentialSpec& spec);

/// Integer q of the well; std::domain_error when q is not an integer.
int require_integer_q(const PotentialSpec& spec);

double depth_for_integer_q(int q, double alpha = 1.0, double mu = 1.0, double hbar = 1.0);

/// Label (nu, n, epsilon = (nu - 2n - 1)/2, j, m) for state n of a representation with parameter nu.
StateLabel make_label(double nu, int n);

/// Label of bound state n of the well.
StateLabel state_label(const PotentialSpec& spec, int n);

/// E_n = -(alpha^2 hbar^2 / 2 mu)(q - n)^2; std::domain_error beyond n_max.
double energy(const PotentialSpec& spec, int n);

/// Normalization of Psi_n^q, evaluated in log space with x! = Gamma(x + 1).
double normalization_constant(double q, int n, double alpha);

/// Normalized bound state n of a well, with its parameters cached for repeated sampling.
class BoundState {
 public:
  BoundState(const PotentialSpec& spec, int n);

  int n() const noexcept { return n_; }
  double epsilon() const noexcept { return epsilon_; }
  double gegenbauer_index() const noexcept { return lambda_; }
  double norm() const noexcept { return norm_; }

  double value(double x) const;
  /// Analytic d Psi / dx.
  double derivative(double x) const;
  /// Largest |Psi| envelope coefficient: |Psi(x)| <= envelope() * sech(alpha x)^epsilon.
  double envelope() const;

 private:
  double alpha_;
  int n_;
  double epsilon_;
  double lambda_;
  double norm_;
};

double wavefunction(const PotentialSpec& spec, int n, double x);
double wavefunction_derivative(const PotentialSpec& spec, int n, double x);

/// ln cosh(y), accurate for large |y|.
double log_cosh(double y);

}  // namespace mpt

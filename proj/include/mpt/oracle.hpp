#pragma once

#include <functional>
#include <optional>

#include "mpt/operator_matrix.hpp"
#include "mpt/specfun.hpp"
#include "mpt/states.hpp"

namespace mpt::oracle {

enum class ObservableKind { kIdentity, kSinhAlphaX, kCoshDdxOverAlpha, kPositionX, kDdx, kPotential, kCustom };

enum class Parity { kEven, kOdd };

/// An observable O whose matrix elements <n'| O |n> the oracle integrates.
/// Custom observables multiply either Psi or dPsi/dx by a function of x.
class Observable {
 public:
  static Observable identity() { return Observable(ObservableKind::kIdentity); }
  static Observable sinh_alpha_x() { return Observable(ObservableKind::kSinhAlphaX); }
  static Observable cosh_ddx_over_alpha() { return Observable(ObservableKind::kCoshDdxOverAlpha); }
  static Observable position_x() { return Observable(ObservableKind::kPositionX); }
  static Observable ddx() { return Observable(ObservableKind::kDdx); }
  static Observable potential() { return Observable(ObservableKind::kPotential); }

  /// `exponential_growth` is the rate g in |f(x)| <~ e^{g alpha |x|} (x)^3; 0 for polynomial growth.
  static Observable custom(std::function<double(double)> f, bool acts_on_derivative,
                           std::optional<Parity> parity = std::nullopt, double exponential_growth = 0.0);

  ObservableKind kind() const noexcept { return kind_; }
  bool acts_on_derivative() const noexcept;
  /// Parity of the operator under x -> -x, when known.
  std::optional<Parity> parity() const noexcept;
  /// Exponential growth rate g of the multiplier, in units of alpha |x|.
  double exponential_growth() const noexcept;
  /// Multiplier f(x) for the well.
  double multiplier(const PotentialSpec& spec, double x) const;

 private:
  explicit Observable(ObservableKind kind) : kind_(kind) {}

  ObservableKind kind_;
  std::function<double(double)> custom_;
  bool custom_on_derivative_ = false;
  std::optional<Parity> custom_parity_;
  double custom_growth_ = 0.0;
};

struct OracleConfig {
  int rule_order = 24;
  int panels = 32;
  double tail_tolerance = 1e-14;
  double max_halfwidth = 1e3;
};

/// Truncation half-width L for the pair (n', n): the integrand envelope, including the
/// normalization, Gegenbauer and observable growth factors, is below tail_tolerance at |x| = L.
/// Always at least the asymptotic bound exp(-(eps+eps') alpha L)(1 + (alpha L)^3) <= tolerance.
double truncation_halfwidth(const PotentialSpec& spec, int n_prime, int n, const Observable& obs,
                            const OracleConfig& cfg);

/// Integral of Psi_{n'}(x) O[Psi_n](x) over [-L, L] by composite Gauss-Legendre.
double matrix_element(const PotentialSpec& spec, int n_prime, int n, const Observable& obs,
                      const OracleConfig& cfg = {});

/// All bound-pair elements; entries forbidden by parity are written as exact zeros.
OperatorMatrix observable_matrix(const PotentialSpec& spec, const Observable& obs, const OracleConfig& cfg = {});

/// R[n', n] = <n'| d/dx |n>. The momentum matrix is -i hbar R.
OperatorMatrix derivative_matrix(const PotentialSpec& spec, const OracleConfig& cfg = {});

/// Number of cached element integrals; cleared by clear_cache().
std::size_t cache_size();
void clear_cache();

}  // namespace mpt::oracle

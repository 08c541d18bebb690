#include "mpt/oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mpt::oracle {

namespace {

using CacheKey = std::tuple<double, double, double, double, int, int, int, double, double, int, int>;

struct ElementCache {
  std::mutex mutex;
  std::map<CacheKey, double> values;
};

ElementCache& cache() {
  static ElementCache instance;
  return instance;
}

CacheKey make_key(const PotentialSpec& spec, int n_prime, int n, const Observable& obs, const OracleConfig& cfg) {
  return {spec.depth(), spec.alpha(), spec.mu(), spec.hbar(), static_cast<int>(obs.kind()), cfg.rule_order,
          cfg.panels, cfg.tail_tolerance, cfg.max_halfwidth, n_prime, n};
}

// Smallest y on a 1/16 grid past which log_bound(y) stays below log_tol.
template <typename F>
double solve_tail(F log_bound, double log_tol, double y_cap) {
  double y = 0.0;
  while (y < y_cap) {
    if (log_bound(y) <= log_tol && log_bound(y + 1.0) <= log_tol) {
      return y;
    }
    y += 0.0625;
  }
  return y_cap;
}

double derivative_envelope(const BoundState& s, double alpha) {
  const double c1 = std::fabs(specfun::gegenbauer(s.n(), s.gegenbauer_index(), 1.0));
  const double dc1 = std::fabs(specfun::gegenbauer_derivative(s.n(), s.gegenbauer_index(), 1.0));
  return alpha * s.norm() * (s.epsilon() * c1 + dc1);
}

void require_pair(const PotentialSpec& spec, int n_prime, int n) {
  const WellNumbers w = well_numbers(spec);
  if (!w.n_max || n < 0 || n_prime < 0 || n > *w.n_max || n_prime > *w.n_max) {
    throw std::domain_error("oracle: state index outside the bound spectrum");
  }
}

}  // namespace

Observable Observable::custom(std::function<double(double)> f, bool acts_on_derivative, std::optional<Parity> parity,
                              double exponential_growth) {
  Observable obs(ObservableKind::kCustom);
  obs.custom_ = std::move(f);
  obs.custom_on_derivative_ = acts_on_derivative;
  obs.custom_parity_ = parity;
  obs.custom_growth_ = exponential_growth;
  return obs;
}

bool Observable::acts_on_derivative() const noexcept {
  switch (kind_) {
    case ObservableKind::kCoshDdxOverAlpha:
    case ObservableKind::kDdx:
      return true;
    case ObservableKind::kCustom:
      return custom_on_derivative_;
    default:
      return false;
  }
}

std::optional<Parity> Observable::parity() const noexcept {
  switch (kind_) {
    case ObservableKind::kIdentity:
    case ObservableKind::kPotential:
      return Parity::kEven;
    case ObservableKind::kSinhAlphaX:
    case ObservableKind::kCoshDdxOverAlpha:
    case ObservableKind::kPositionX:
    case ObservableKind::kDdx:
      return Parity::kOdd;
    case ObservableKind::kCustom:
      return custom_parity_;
  }
  return std::nullopt;
}

double Observable::exponential_growth() const noexcept {
  switch (kind_) {
    case ObservableKind::kSinhAlphaX:
    case ObservableKind::kCoshDdxOverAlpha:
      return 1.0;
    case ObservableKind::kCustom:
      return custom_growth_;
    default:
      return 0.0;
  }
}

double Observable::multiplier(const PotentialSpec& spec, double x) const {
  const double a = spec.alpha();
  switch (kind_) {
    case ObservableKind::kIdentity:
    case ObservableKind::kDdx:
      return 1.0;
    case ObservableKind::kSinhAlphaX:
      return std::sinh(a * x);
    case ObservableKind::kCoshDdxOverAlpha:
      return std::cosh(a * x) / a;
    case ObservableKind::kPositionX:
      return x;
    case ObservableKind::kPotential: {
      const double s = 1.0 / std::cosh(a * x);
      return -spec.depth() * s * s;
    }
    case ObservableKind::kCustom:
      return custom_(x);
  }
  return 0.0;
}

double truncation_halfwidth(const PotentialSpec& spec, int n_prime, int n, const Observable& obs,
                            const OracleConfig& cfg) {
  require_pair(spec, n_prime, n);
  const BoundState left(spec, n_prime);
  const BoundState right(spec, n);
  const double alpha = spec.alpha();
  const double decay = left.epsilon() + right.epsilon();
  const double growth = obs.exponential_growth();
  if (!(decay - growth > 0.0)) {
    throw std::domain_error("oracle: integrand is not integrable for this pair of states");
  }
  const double log_tol = std::log(cfg.tail_tolerance);
  const double y_cap = cfg.max_halfwidth * alpha;

  const double asymptotic =
      solve_tail([&](double y) { return -decay * y + std::log1p(y * y * y); }, log_tol, y_cap);

  const double right_env = obs.acts_on_derivative() ? derivative_envelope(right, alpha) : right.envelope();
  double scale = left.envelope() * right_env;
  if (obs.kind() == ObservableKind::kPotential) {
    scale *= spec.depth();
  }
  const double log_scale = std::log(std::max(scale, 1e-300)) + std::log(std::max(1.0, 1.0 / alpha));
  const double envelope = solve_tail(
      [&](double y) { return log_scale + growth * y - decay * log_cosh(y) + std::log1p(y * y * y); }, log_tol, y_cap);

  return std::max(asymptotic, envelope) / alpha;
}

double matrix_element(const PotentialSpec& spec, int n_prime, int n, const Observable& obs, const OracleConfig& cfg) {
  require_pair(spec, n_prime, n);
  const bool cacheable = obs.kind() != ObservableKind::kCustom;
  if (cacheable) {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    if (auto it = c.values.find(make_key(spec, n_prime, n, obs, cfg)); it != c.values.end()) {
      return it->second;
    }
  }

  const BoundState left(spec, n_prime);
  const BoundState right(spec, n);
  const bool on_derivative = obs.acts_on_derivative();
  const double half_width = truncation_halfwidth(spec, n_prime, n, obs, cfg);
  const auto rule = specfun::gauss_legendre(cfg.rule_order);
  const double value = specfun::integrate(
      [&](double x) {
        const double target = on_derivative ? right.derivative(x) : right.value(x);
        return left.value(x) * obs.multiplier(spec, x) * target;
      },
      -half_width, half_width, rule, cfg.panels);

  if (cacheable) {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    c.values.emplace(make_key(spec, n_prime, n, obs, cfg), value);
  }
  return value;
}

OperatorMatrix observable_matrix(const PotentialSpec& spec, const Observable& obs, const OracleConfig& cfg) {
  const int q = require_integer_q(spec);
  const int nu = 2 * q + 1;
  const auto parity = obs.parity();
  Matrix m = Matrix::Zero(q, q);
  for (int row = 0; row < q; ++row) {
    for (int col = 0; col < q; ++col) {
      if (parity) {
        const bool pair_even = (row + col) % 2 == 0;
        const bool allowed = (*parity == Parity::kEven) == pair_even;
        if (!allowed) {
          continue;
        }
      }
      m(row, col) = matrix_element(spec, row, col, obs, cfg);
    }
  }
  return make_operator(std::move(m), nu, BasisKind::kPhysical);
}

OperatorMatrix derivative_matrix(const PotentialSpec& spec, const OracleConfig& cfg) {
  return observable_matrix(spec, Observable::ddx(), cfg);
}

std::size_t cache_size() {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  return c.values.size();
}

void clear_cache() {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  c.values.clear();
}

}  // namespace mpt::oracle

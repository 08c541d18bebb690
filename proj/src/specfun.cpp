#include "mpt/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mpt::specfun {

double gegenbauer(int n, double lambda, double t) {
  if (n < 0) {
    throw std::domain_error("gegenbauer: degree must be non-negative");
  }
  if (n == 0) {
    return 1.0;
  }
  if (!(lambda > -0.5)) {
    throw std::domain_error("gegenbauer: lambda > -1/2 is required");
  }
  double previous = 1.0;
  double current = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * (k + lambda - 1.0) * t * current - (k + 2.0 * lambda - 2.0) * previous) / k;
    previous = current;
    current = next;
  }
  return current;
}

double gegenbauer_derivative(int n, double lambda, double t) {
  if (n < 0) {
    throw std::domain_error("gegenbauer_derivative: degree must be non-negative");
  }
  if (n == 0) {
    return 0.0;
  }
  return 2.0 * lambda * gegenbauer(n - 1, lambda + 1.0, t);
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_gamma: argument must be positive and finite");
  }
  // Extended precision evaluation, rounded once.
  return static_cast<double>(std::lgammal(static_cast<long double>(x)));
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) {
    throw std::domain_error("gauss_legendre: order must be positive");
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root.
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (order + 0.5L));
    long double derivative = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p0 = 1.0L;
      }
      derivative = order * (x * p1 - p0) / (x * x - 1.0L);
      const long double step = p1 / derivative;
      x -= step;
      if (std::fabs(step) < 1e-18L) {
        break;
      }
    }
    if (order == 1) {
      x = 0.0L;
      derivative = 1.0L;
    }
    const long double w = 2.0L / ((1.0L - x * x) * derivative * derivative);
    rule.nodes[order - 1 - i] = static_cast<double>(x);
    rule.nodes[i] = -static_cast<double>(x);
    rule.weights[order - 1 - i] = static_cast<double>(w);
    rule.weights[i] = static_cast<double>(w);
  }
  if (order % 2 == 1) {
    rule.nodes[order / 2] = 0.0;
  }
  return rule;
}

double integrate(const RealFunction& f, double a, double b, const QuadratureRule& rule, int panels) {
  if (!(a < b)) {
    throw std::domain_error("integrate: requires a < b");
  }
  if (panels < 1) {
    throw std::domain_error("integrate: panels must be positive");
  }
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel_sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = mid + half * rule.nodes[k];
      const double value = f(x);
      if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrate: non-finite integrand at x = " << x;
        throw EvaluationError(msg.str(), x);
      }
      panel_sum += rule.weights[k] * value;
    }
    total += half * panel_sum;
  }
  return total;
}

}  // namespace mpt::specfun

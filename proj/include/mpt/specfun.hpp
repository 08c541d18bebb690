#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpt::specfun {

/// Thrown when an integrand produces a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Gauss-Legendre nodes and weights on [-1, 1]; nodes ascending.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

/// Gegenbauer polynomial C_n^lambda(t) by forward three-term recurrence.
/// lambda must exceed -1/2 except for n = 0, where C_0 = 1 for any lambda.
double gegenbauer(int n, double lambda, double t);

/// dC_n^lambda/dt = 2 lambda C_{n-1}^{lambda+1}(t); zero for n = 0.
double gegenbauer_derivative(int n, double lambda, double t);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

QuadratureRule gauss_legendre(int order);

using RealFunction = std::function<double(double)>;

/// Composite Gauss-Legendre over `panels` equal subintervals of [a, b].
/// Throws EvaluationError naming the abscissa of the first non-finite sample.
double integrate(const RealFunction& f, double a, double b, const QuadratureRule& rule, int panels);

}  // namespace mpt::specfun

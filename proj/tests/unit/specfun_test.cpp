#include "mpt/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace mpt::specfun;

namespace {

// Explicit low-degree Gegenbauer polynomials.
double explicit_gegenbauer(int n, double l, double t) {
  switch (n) {
    case 0:
      return 1.0;
    case 1:
      return 2.0 * l * t;
    case 2:
      return 2.0 * l * (l + 1.0) * t * t - l;
    case 3:
      return 4.0 / 3.0 * l * (l + 1.0) * (l + 2.0) * t * t * t - 2.0 * l * (l + 1.0) * t;
  }
  return NAN;
}

std::vector<double> t_grid() {
  std::vector<double> ts;
  for (int i = 0; i <= 20; ++i) {
    ts.push_back(-1.0 + 0.1 * i);
  }
  return ts;
}

}  // namespace

TEST(Gegenbauer, Examples) {
  EXPECT_EQ(gegenbauer(0, 1.5, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(gegenbauer(1, 2.0, 0.5), 2.0);
  // C_n^lambda(1) = binom(n + 2 lambda - 1, n)
  EXPECT_NEAR(gegenbauer(2, 1.0, 1.0), 3.0, 1e-14);
  EXPECT_EQ(gegenbauer(0, -3.0, 0.2), 1.0);
}

TEST(Gegenbauer, MatchesExplicitLowDegreeForms) {
  for (double l : {0.5, 1.0, 2.5}) {
    for (double t : t_grid()) {
      for (int n = 0; n <= 3; ++n) {
        EXPECT_NEAR(gegenbauer(n, l, t), explicit_gegenbauer(n, l, t), 1e-12) << n << " " << l << " " << t;
      }
    }
  }
}

TEST(Gegenbauer, HighDegreeAgainstExtendedPrecisionValues) {
  // Reference values from 40-digit arithmetic.
  EXPECT_NEAR(gegenbauer(30, 2.5, 0.3), 49.67924706586288875, 1e-12 * 50);
  EXPECT_NEAR(gegenbauer(25, 1.0, -0.7), -1.353210398723114678, 1e-12);
  EXPECT_NEAR(gegenbauer(17, 0.5, 0.9), 0.1990293385689161733, 1e-12);
  EXPECT_NEAR(gegenbauer(30, 0.5, 1.0), 1.0, 1e-12);
  EXPECT_NEAR(gegenbauer(12, 2.5, -0.45), 17.788626236497625355, 1e-12 * 18);
}

TEST(Gegenbauer, Parity) {
  for (double l : {0.5, 1.0, 2.5}) {
    for (double t : t_grid()) {
      for (int n = 0; n <= 30; ++n) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        const double v = gegenbauer(n, l, t);
        EXPECT_NEAR(gegenbauer(n, l, -t), sign * v, 1e-12 * std::max(1.0, std::fabs(v)));
      }
    }
  }
}

TEST(Gegenbauer, DomainErrors) {
  EXPECT_THROW(gegenbauer(-1, 1.0, 0.0), std::domain_error);
  EXPECT_THROW(gegenbauer(2, -0.5, 0.0), std::domain_error);
  EXPECT_THROW(gegenbauer_derivative(-1, 1.0, 0.0), std::domain_error);
}

TEST(GegenbauerDerivative, Examples) {
  EXPECT_EQ(gegenbauer_derivative(0, 2.0, 0.7), 0.0);
  EXPECT_DOUBLE_EQ(gegenbauer_derivative(1, 2.0, 0.7), 4.0);
  const double h = 1e-5;
  const double fd = (gegenbauer(2, 1.0, 0.5 + h) - gegenbauer(2, 1.0, 0.5 - h)) / (2 * h);
  EXPECT_NEAR(gegenbauer_derivative(2, 1.0, 0.5), fd, 1e-7);
}

TEST(GegenbauerDerivative, FiniteDifferenceSweep) {
  const double h = 1e-5;
  for (double l : {0.5, 1.5, 4.5}) {
    for (int n = 1; n <= 8; ++n) {
      for (double t : {-0.9, -0.3, 0.2, 0.75}) {
        const double fd = (gegenbauer(n, l, t + h) - gegenbauer(n, l, t - h)) / (2 * h);
        EXPECT_NEAR(gegenbauer_derivative(n, l, t), fd, 1e-6 * std::max(1.0, std::fabs(fd)));
      }
    }
  }
}

TEST(LogGamma, Examples) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LogGamma, AbsoluteAccuracyOverRange) {
  // Reference values from 40-digit arithmetic.
  const std::pair<double, double> ref[] = {
      {1e-3, 6.907178885383853682512}, {2.5, 0.2846828704729191596325}, {10.3, 13.48203678613835697062},
      {57.5, 174.3721298187451532268}, {100.0, 359.1342053695753987760}, {199.5, 855.2863892734525737938},
      {200.0, 857.9336698258574368183},
  };
  for (auto [x, expected] : ref) {
    EXPECT_NEAR(log_gamma(x), expected, 1e-13) << x;
  }
}

TEST(LogGamma, RecurrenceProperty) {
  for (double x = 0.5; x <= 50.5; x += 1.0) {
    EXPECT_NEAR(log_gamma(x + 1.0) - log_gamma(x) - std::log(x), 0.0, 1e-12) << x;
  }
}

TEST(LogGamma, DomainErrors) {
  EXPECT_THROW(log_gamma(0.0), std::domain_error);
  EXPECT_THROW(log_gamma(-2.5), std::domain_error);
}

TEST(GaussLegendre, OrderOne) {
  const auto rule = gauss_legendre(1);
  ASSERT_EQ(rule.nodes.size(), 1u);
  EXPECT_EQ(rule.nodes[0], 0.0);
  EXPECT_NEAR(rule.weights[0], 2.0, 1e-15);
}

TEST(GaussLegendre, RuleInvariants) {
  for (int order : {1, 2, 3, 5, 10, 20, 24, 41}) {
    const auto rule = gauss_legendre(order);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i];
      EXPECT_GT(rule.weights[i], 0.0);
      EXPECT_NEAR(rule.nodes[i], -rule.nodes[order - 1 - i], 1e-13);
      if (i > 0) {
        EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
      }
    }
    EXPECT_NEAR(sum, 2.0, 1e-13) << order;
  }
}

TEST(GaussLegendre, MonomialExactness) {
  for (int k : {2, 5, 10, 20}) {
    const auto rule = gauss_legendre(k);
    for (int degree = 0; degree <= 2 * k - 1; ++degree) {
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * std::pow(rule.nodes[i], degree);
      }
      const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
      EXPECT_NEAR(sum, exact, 1e-12) << "order " << k << " degree " << degree;
    }
  }
}

TEST(GaussLegendre, Examples) {
  const auto two = gauss_legendre(2);
  EXPECT_NEAR(integrate([](double t) { return t * t; }, -1, 1, two, 1), 2.0 / 3.0, 1e-14);
  const auto twenty = gauss_legendre(20);
  EXPECT_NEAR(integrate([](double t) { return std::pow(t, 38); }, -1, 1, twenty, 1), 2.0 / 39.0, 1e-12);
  EXPECT_THROW(gauss_legendre(0), std::domain_error);
}

TEST(Integrate, Examples) {
  const auto rule = gauss_legendre(20);
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 0, 1, rule, 1), 1.0, 1e-15);
  EXPECT_NEAR(integrate([](double t) { return std::exp(-t * t); }, -8, 8, rule, 16), std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_NEAR(integrate([](double t) { return std::cos(t); }, 0, std::numbers::pi / 2, rule, 4), 1.0, 1e-12);
}

TEST(Integrate, NonFiniteIntegrandReportsAbscissa) {
  const auto rule = gauss_legendre(4);
  try {
    integrate([](double t) { return t > 0.5 ? NAN : t; }, 0, 1, rule, 2);
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_GT(e.abscissa(), 0.5);
    EXPECT_LT(e.abscissa(), 1.0);
  }
  EXPECT_THROW(integrate([](double) { return 1.0; }, 1, 0, rule, 1), std::domain_error);
}

#include "mpt/su2_ladder.hpp"

#include <gtest/gtest.h>

#include <cfloat>
#include <cmath>

using namespace mpt;
using namespace mpt::su2;

TEST(LadderCoefficients, Examples) {
  EXPECT_EQ(lowering_coefficient(5, 0), 0.0);
  EXPECT_DOUBLE_EQ(lowering_coefficient(5, 1), 2.0);
  EXPECT_DOUBLE_EQ(lowering_coefficient(7, 2), std::sqrt(10.0));
  EXPECT_EQ(raising_coefficient(5, 4), 0.0);
  EXPECT_DOUBLE_EQ(raising_coefficient(5, 0), 2.0);
  EXPECT_DOUBLE_EQ(raising_coefficient(7, 1), std::sqrt(10.0));
  EXPECT_THROW(lowering_coefficient(5, 5), std::domain_error);
  EXPECT_THROW(raising_coefficient(5, -1), std::domain_error);
}

TEST(LadderCoefficients, RaisingMirrorsLowering) {
  for (int nu = 3; nu <= 41; nu += 2) {
    for (int n = 0; n + 1 < nu; ++n) {
      EXPECT_DOUBLE_EQ(raising_coefficient(nu, n), lowering_coefficient(nu, n + 1));
    }
  }
}

TEST(BuildSu2, NuThree) {
  const auto t = build_su2_matrices(3);
  Matrix expected = Matrix::Zero(3, 3);
  expected(1, 0) = std::sqrt(2.0);
  expected(2, 1) = std::sqrt(2.0);
  EXPECT_LT(max_abs(t.plus.values - expected), 1e-15);
  EXPECT_EQ(t.plus.kind, BasisKind::kFullSpin);
  EXPECT_DOUBLE_EQ(t.j, 1.0);
  EXPECT_THROW(build_su2_matrices(4), std::domain_error);
  EXPECT_THROW(build_su2_matrices(1), std::domain_error);
}

TEST(BuildSu2, CommutationRelationsAndCasimir) {
  for (int nu = 3; nu <= 41; nu += 2) {
    const auto t = build_su2_matrices(nu);
    const Matrix& pp = t.plus.values;
    const Matrix& pm = t.minus.values;
    const Matrix& p0 = t.zero.values;
    EXPECT_LT(max_abs(commutator(pp, pm) - 2.0 * p0), 1e-12) << nu;
    EXPECT_LT(max_abs(commutator(p0, pm) + pm), 1e-12) << nu;
    EXPECT_LT(max_abs(commutator(p0, pp) - pp), 1e-12) << nu;
    EXPECT_LT(max_abs(pm - pp.transpose()), 1e-14);
    EXPECT_NEAR(p0.trace(), 0.0, 1e-12);
    const double j = (nu - 1) / 2.0;
    EXPECT_LT(max_abs(casimir(t).values - j * (j + 1) * Matrix::Identity(nu, nu)), 1e-12) << nu;
    for (int k = 1; k < t.plus.dim(); ++k) {
      EXPECT_GT(t.plus.basis[k].n, t.plus.basis[k - 1].n);
    }
  }
}

TEST(Casimir, Examples) {
  EXPECT_LT(max_abs(casimir(build_su2_matrices(5)).values - 6.0 * Matrix::Identity(5, 5)), 1e-12);
  EXPECT_LT(max_abs(casimir(build_su2_matrices(3)).values - 2.0 * Matrix::Identity(3, 3)), 1e-12);
  EXPECT_LT(max_abs(casimir(build_su2_matrices(21)).values - 110.0 * Matrix::Identity(21, 21)), 1e-12);
  EXPECT_THROW(casimir(project_physical(build_su2_matrices(7))), std::domain_error);
}

TEST(ProjectPhysical, DimensionsAndBranch) {
  EXPECT_EQ(project_physical(build_su2_matrices(5)).plus.dim(), 2);
  EXPECT_EQ(project_physical(build_su2_matrices(7)).plus.dim(), 3);
  for (int nu = 5; nu <= 21; nu += 2) {
    const auto p = project_physical(build_su2_matrices(nu));
    EXPECT_EQ(p.plus.kind, BasisKind::kPhysical);
    for (const auto& s : p.plus.basis) {
      EXPECT_LE(s.m, -1.0);
      EXPECT_GE(s.epsilon, 1.0);
    }
    // Edge column has no raised component; the commutator holds away from the edge.
    const int d = p.plus.dim();
    EXPECT_EQ(p.plus.values.col(d - 1).cwiseAbs().sum(), 0.0);
    const Matrix c = commutator(p.plus.values, p.minus.values) - 2.0 * p.zero.values;
    EXPECT_LT(max_abs(c.topLeftCorner(d - 1, d - 1)), 1e-12);
    EXPECT_GT(std::fabs(c(d - 1, d - 1)), 1.0);
  }
}

TEST(HamiltonianDiagonal, ReproducesEnergies) {
  Matrix expected = Matrix::Zero(2, 2);
  expected.diagonal() << -2.0, -0.5;
  EXPECT_LT(max_abs(hamiltonian_diagonal(PotentialSpec::for_integer_q(2)).values - expected), 1e-15);
  const auto h3 = hamiltonian_diagonal(PotentialSpec::for_integer_q(3)).values;
  EXPECT_DOUBLE_EQ(h3(0, 0), -4.5);
  EXPECT_DOUBLE_EQ(h3(1, 1), -2.0);
  EXPECT_DOUBLE_EQ(h3(2, 2), -0.5);
  for (int q = 1; q <= 20; ++q) {
    const auto spec = PotentialSpec::for_integer_q(q, 0.9, 1.4, 0.7);
    const auto h = hamiltonian_diagonal(spec).values;
    for (int n = 0; n < q; ++n) {
      EXPECT_NEAR(h(n, n), energy(spec, n), 4 * DBL_EPSILON * std::fabs(energy(spec, n)));
      if (n > 0) EXPECT_GT(h(n, n), h(n - 1, n - 1));
    }
  }
  EXPECT_THROW(hamiltonian_diagonal(PotentialSpec(2.0, 1, 1, 1)), std::domain_error);
}

TEST(NormalizationChain, Examples) {
  EXPECT_DOUBLE_EQ(normalization_chain(5, 0), 1.0);
  EXPECT_NEAR(normalization_chain(5, 1), 0.5, 1e-15);
  EXPECT_NEAR(normalization_chain(7, 2), 1.0 / (std::sqrt(6.0) * std::sqrt(10.0)), 1e-15);
  EXPECT_THROW(normalization_chain(7, 3), std::domain_error);
}

TEST(NormalizationChain, InverseProductOfRaisingAmplitudes) {
  for (int nu = 3; nu <= 61; nu += 2) {
    double product = 1.0;
    for (int n = 0; n <= (nu - 3) / 2; ++n) {
      EXPECT_NEAR(normalization_chain(nu, n) * product, 1.0, 1e-12) << nu << " " << n;
      product *= raising_coefficient(nu, n);
    }
  }
}

TEST(SinhMatrix, Examples) {
  const auto s5 = sinh_matrix(5);
  EXPECT_NEAR(s5(0, 1), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(s5(1, 0), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(sinh_matrix(7)(0, 1), 0.5, 1e-15);
  for (int nu = 3; nu <= 41; nu += 2) {
    const auto s = sinh_matrix(nu);
    EXPECT_EQ(s.values.diagonal().cwiseAbs().sum(), 0.0);
    EXPECT_LT(max_abs(s.values - s.values.transpose()), 1e-14);
    EXPECT_TRUE(s.values.allFinite());
  }
}

TEST(CoshDdxMatrix, ExamplesAndIntegrationByParts) {
  const auto m7 = cosh_ddx_matrix(7);
  EXPECT_NEAR(m7(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(m7(1, 0), -1.5, 1e-15);
  EXPECT_NEAR(cosh_ddx_matrix(5)(0, 1), std::sqrt(2.0) / 2.0, 1e-15);
  for (int nu = 3; nu <= 41; nu += 2) {
    const auto m = cosh_ddx_matrix(nu).values;
    EXPECT_EQ(m.diagonal().cwiseAbs().sum(), 0.0);
    EXPECT_LT(max_abs(m + m.transpose() + sinh_matrix(nu).values), 1e-12) << nu;
  }
}

TEST(LadderAction, ReproducesNeighbouringStates) {
  for (int q : {2, 3, 5}) {
    const auto spec = PotentialSpec::for_integer_q(q, 1.2);
    const int nu = 2 * q + 1;
    for (int n = 0; n < q; ++n) {
      for (int i = 0; i <= 48; ++i) {
        const double x = (-6.0 + 0.25 * i) / spec.alpha();
        const double lowered = n > 0 ? lowering_coefficient(nu, n) * wavefunction(spec, n - 1, x) : 0.0;
        EXPECT_NEAR(lowering_action(spec, n, x), lowered, 1e-8) << q << " " << n << " " << x;
        const double raised = n + 1 < q ? raising_coefficient(nu, n) * wavefunction(spec, n + 1, x) : 0.0;
        EXPECT_NEAR(raising_action(spec, n, x), raised, 1e-8) << q << " " << n << " " << x;
      }
    }
  }
}

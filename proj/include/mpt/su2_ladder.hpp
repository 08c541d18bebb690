#pragma once

#include "mpt/operator_matrix.hpp"
#include "mpt/states.hpp"

namespace mpt::su2 {

/// p_-(n) = sqrt(n (nu - n)), the lowering amplitude of state n.
double lowering_coefficient(int nu, int n);

/// p_+(n) = sqrt((n + 1)(nu - n - 1)), the raising amplitude of state n.
double raising_coefficient(int nu, int n);

struct LadderTriple {
  OperatorMatrix plus;
  OperatorMatrix minus;
  OperatorMatrix zero;
  int nu = 0;
  double j = 0.0;
};

/// Full spin-j representation (dimension nu) for odd nu >= 3.
LadderTriple build_su2_matrices(int nu);

/// Truncation to the bound-state branch n <= (nu - 3)/2.
LadderTriple project_physical(const LadderTriple& triple);

/// P0^2 + (P+P- + P-P+)/2; only defined on the full representation.
OperatorMatrix casimir(const LadderTriple& triple);

/// -(hbar omega / nu) P0^2 with omega = hbar alpha^2 nu / (2 mu), on the physical branch.
OperatorMatrix hamiltonian_diagonal(const PotentialSpec& spec);

/// sqrt((nu - n - 1)! / (n! (nu - 1)!)), the factor turning P+^n Psi_0 into Psi_n.
double normalization_chain(int nu, int n);

/// <n'| sinh(alpha x) |n> on the physical branch.
OperatorMatrix sinh_matrix(int nu);

/// <n'| cosh(alpha x)/alpha d/dx |n> on the physical branch.
OperatorMatrix cosh_ddx_matrix(int nu);

// Differential ladder operators applied to Psi_n at x, in the physical variable:
//   P- = sqrt((eps+1)/eps) [cosh(ax)/a d/dx + eps sinh(ax)]
//   P+ = sqrt((eps-1)/eps) [-cosh(ax)/a d/dx + eps sinh(ax)]
// with eps the epsilon of the state acted on.
double lowering_action(const PotentialSpec& spec, int n, double x);
double raising_action(const PotentialSpec& spec, int n, double x);

/// Validates nu as an odd integer >= 3.
void require_odd_nu(int nu);

}  // namespace mpt::su2

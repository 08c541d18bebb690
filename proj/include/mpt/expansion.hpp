#pragma once

#include <stdexcept>
#include <string>

#include "mpt/operator_matrix.hpp"
#include "mpt/oracle.hpp"
#include "mpt/states.hpp"

namespace mpt::expansion {

/// Raised when a coefficient diverges at the last bound state (epsilon = 1).
class EdgeStateError : public std::domain_error {
 public:
  explicit EdgeStateError(const std::string& what) : std::domain_error(what) {}
};

enum class CoeffKind { kF, kG, kH, kQ };

enum class BosonKind { kRenormalizedSu2, kApproxC, kPhysicalC };

struct BosonPair {
  OperatorMatrix create;
  OperatorMatrix annihilate;
  int nu = 0;
  BosonKind kind = BosonKind::kRenormalizedSu2;
};

/// b^dagger = P+/sqrt(nu), b = P-/sqrt(nu) on the physical branch.
BosonPair renormalized_generators(int nu);

/// f = sqrt(nu/(e(e-1))), g = sqrt(nu/(e(e+1))), h = sqrt(nu e/(e-1)), q = sqrt(nu e/(e+1)), 2e = nu - 2n - 1.
/// f and h throw EdgeStateError at epsilon = 1.
double coeff(int nu, int n, CoeffKind which);

/// Diagonal coefficient matrix over the physical branch; closed channels are 0.
Matrix coeff_diagonal(int nu, CoeffKind which);

/// alpha x = T - T^3/6 + 3 T^5/40 with T = (B^dagger F + B G)/2, returned divided by alpha.
/// Orders 1, 3, 5. Order 5 extends the displayed series with the next arcsinh coefficient.
OperatorMatrix x_matrix_expansion(int nu, double alpha, int order);

/// Sign pattern of the cubic momentum correction.
enum class MomentumSigns {
  /// (cosh/alpha d/dx) scaled by sech(alpha x) ~ 1 - T^2/2.
  kSechConsistent,
  /// Bracket with the signs exactly as displayed, including the final "+" term.
  kAsPrinted,
  /// Displayed overall sign, alternating pattern carried through the final term.
  kPrintedAlternating,
};

/// Real R with p = -i hbar R. Order 1: R = alpha (B Q - B^dagger H)/2. Order 3 adds the
/// cubic correction (alpha/16) * (ordered products) under the chosen sign pattern.
OperatorMatrix p_matrix_expansion(int nu, double alpha, int order, MomentumSigns signs = MomentumSigns::kSechConsistent);

struct ZZeta {
  double z = 0.0;
  double zeta = 0.0;
};

/// z_n and zeta_n; EdgeStateError for z at n = n_max (divergent edge).
ZZeta z_zeta(int nu, int n);
double zeta(int nu, int n);

/// c^dagger ~ B^dagger Z + B Zeta, annihilate the transpose; z at the edge is excluded.
BosonPair approx_c_ops(int nu);

/// c^dagger = sqrt(mu w/2 hbar) X - sqrt(hbar/(2 mu w)) R from oracle matrices, w = omega tilde.
BosonPair physical_c_ops(const PotentialSpec& spec, const oracle::OracleConfig& cfg = {});

/// omega tilde = (alpha^2 hbar / mu) k.
double omega_tilde(const PotentialSpec& spec);

}  // namespace mpt::expansion

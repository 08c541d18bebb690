#pragma once

#include <vector>

#include "mpt/jacobi.hpp"
#include "mpt/operator_matrix.hpp"
#include "mpt/oracle.hpp"
#include "mpt/states.hpp"

namespace mpt::vibron {

struct SpectroParams {
  double omega_e = 0.0;
  double xe_omega_e = 0.0;
};

struct VibronParams {
  int N = 0;
  /// hbar omega_0, an energy.
  double hbar_omega0 = 0.0;
  double lambda = 0.0;
};

/// Product basis |n1, n2>, lexicographic with n1 major: index = n1 * dim_single + n2.
struct TwoOscBasis {
  int dim_single = 0;
  std::vector<std::pair<int, int>> pairs;

  int index(int n1, int n2) const { return n1 * dim_single + n2; }
  int polyad(int index) const { return pairs[index].first + pairs[index].second; }
  int size() const { return static_cast<int>(pairs.size()); }
};

TwoOscBasis make_basis(int dim_single);

/// Hamiltonian of two identical oscillators over a TwoOscBasis.
struct TwoOscMatrix {
  Matrix values;
  TwoOscBasis basis;
};

/// omega_e = hbar omega tilde = (alpha^2 hbar^2/mu) k, x_e omega_e = alpha^2 hbar^2/(2 mu).
SpectroParams spectro_from_potential(const PotentialSpec& spec);

/// N = omega_e/(x_e omega_e) - 1, hbar omega_0 = N x_e omega_e. Throws std::domain_error
/// ("well is not su(2)-compatible") unless N is within 1e-9 of a positive integer.
VibronParams vibron_params_from_spectro(const SpectroParams& sp, double lambda);

/// Inverse map: omega_e = hbar omega_0 (N+1)/N, x_e omega_e = hbar omega_0/N.
SpectroParams spectro_from_vibron(const VibronParams& vp);

/// Zero of energy for the one-body part of the su(2) Hamiltonian.
enum class EnergyOrigin {
  /// hbar omega_0/2 (b^dagger b + b b^dagger) as written; level energies measured from the well bottom.
  kWellBottom,
  /// Shifted by hbar omega_0 j(j+1)/N per oscillator so levels are measured from dissociation.
  kDissociation,
};

/// su(2) vibron Hamiltonian with b = P-/sqrt(N):
/// (hbar w0/2) sum_i (b_i^dagger b_i + b_i b_i^dagger) + lambda hbar w0 (b1^dagger b2 + b1 b2^dagger).
TwoOscMatrix h_su2_matrix(const VibronParams& vp, const TwoOscBasis& basis,
                          EnergyOrigin origin = EnergyOrigin::kWellBottom);

/// Diagonal of uncoupled MPT energies E_{n1} + E_{n2}.
TwoOscMatrix mpt_diagonal(const PotentialSpec& spec, const TwoOscBasis& basis);

/// lambda (p1 p2/mu + mu w^2 x1 x2) with p = -i hbar R, from the oracle position and derivative matrices.
TwoOscMatrix h_mpt_exact_interaction(const PotentialSpec& spec, const TwoOscBasis& basis, double lambda,
                                     const oracle::OracleConfig& cfg = {});

enum class ApproxLevel {
  /// lambda hbar w (b1^dagger b2 + b1 b2^dagger), the A = 1, B = 0 approximation.
  kCrude,
  /// lambda hbar w (c1^dagger c2 + c1 c2^dagger) with c^dagger ~ b^dagger z + b zeta.
  kZetaCorrected,
};

/// Approximate MPT interaction in the renormalized b basis (b = P/sqrt(nu)).
TwoOscMatrix h_mpt_approx_interaction(int nu, double lambda, double omega_tilde, double hbar, ApproxLevel level);

/// (c1^dagger c2 + c1 c2^dagger) lambda hbar w for c^dagger = B^dagger Z + B Zeta, c its transpose,
/// with the z and zeta diagonals given explicitly (one entry per physical state).
TwoOscMatrix h_interaction_from_coeffs(int nu, double lambda, double omega_tilde, double hbar,
                                       const std::vector<double>& z, const std::vector<double>& zeta);

/// Harmonic reference: -D + hbar w (n + 1/2) per oscillator plus lambda hbar w (a1^dagger a2 + a1 a2^dagger).
TwoOscMatrix h_harmonic_model(const PotentialSpec& spec, const TwoOscBasis& basis, double lambda);

/// Diagonal polyad operator n1 + n2.
Matrix polyad_operator(const TwoOscBasis& basis);

/// Frobenius norm of the entries coupling different polyads, restricted to source polyad `source_polyad`
/// (all sources when negative).
double polyad_leakage(const TwoOscMatrix& h, int source_polyad = -1);

/// Matrix conjugated by the oscillator exchange |n1, n2> -> |n2, n1>.
Matrix exchange_conjugate(const TwoOscMatrix& h);

/// Ascending eigenvalues by cyclic Jacobi.
std::vector<double> spectrum(const Matrix& m);

struct ComparisonRow {
  int index = 0;
  double su2 = 0.0;
  double exact = 0.0;
  double crude = 0.0;
  double zeta = 0.0;
  /// Dominant basis pair of the exact-model eigenvector.
  int n1 = 0;
  int n2 = 0;
  int polyad = 0;
};

struct ComparisonReport {
  double lambda = 0.0;
  int nu = 0;
  std::vector<ComparisonRow> rows;
  /// Largest |model - exact| over rows with polyad <= 2.
  double low_polyad_dev_su2 = 0.0;
  double low_polyad_dev_crude = 0.0;
  double low_polyad_dev_zeta = 0.0;
  /// Largest |model - exact| over all rows.
  double max_dev_su2 = 0.0;
  double max_dev_crude = 0.0;
  double max_dev_zeta = 0.0;
};

inline constexpr int kLowPolyad = 2;

/// Spectra of (i) H_su2 measured from dissociation, (ii) MPT diagonal + exact interaction,
/// (iii) diagonal + crude approximation and (iv) diagonal + z/zeta approximation. Integer q >= 3.
ComparisonReport compare_models(const PotentialSpec& spec, double lambda, const oracle::OracleConfig& cfg = {});

}  // namespace mpt::vibron

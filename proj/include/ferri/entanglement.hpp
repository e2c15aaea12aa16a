#pragma once

#include <cstddef>
#include <vector>

#include "ferri/density_matrix.hpp"

namespace ferri {

/// Traces out every factor not listed in `keep`; kept factors retain the
/// order given in `keep`.
DensityMatrix reduce(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

/// Reduced state of two sites, reordered so a spin-1/2 factor comes first.
/// Rejects pairs where neither kept factor is a spin 1/2.
PairState partial_trace(const DensityMatrix& rho, std::size_t site_a, std::size_t site_b);

/// Transpose on the spin-s (second) factor only.
Eigen::MatrixXd partial_transpose(const PairState& rho);
/// Transpose on the spin-1/2 (first) factor; same spectrum as the full transpose
/// of partial_transpose, used to check the negativity does not depend on the factor.
Eigen::MatrixXd partial_transpose_first(const PairState& rho);

struct NegativityReport {
  double negativity = 0.0;
  double trace_norm = 0.0;
  Eigen::VectorXd spectrum;  // ascending eigenvalues of the partial transpose
};

/// Sum of |negative eigenvalues| of rho^T2. Throws InvariantViolation if
/// ||rho^T2||_1 != 1 + 2N beyond 1e-10.
NegativityReport negativity_numeric(const PairState& rho);

/// Negativity of an arbitrary (not necessarily SU(2)-invariant) matrix's
/// eigenvalues: sum of |negative| entries.
double negative_part(const Eigen::VectorXd& eigenvalues);

/// <s1 . S2> = tr(rho s1.S2).
double su2_correlator(const PairState& rho);

/// max(0, -(s + 2c)/(2s+1)). Throws ConfigError if c is outside the physical
/// range [-(s+1)/2, s/2] by more than 1e-9.
double negativity_su2(double correlator, TwiceSpin s);

/// F = <P_{s-1/2}>, through (s - 2c)/(2s+1) and through the explicit projector.
/// Throws InvariantViolation if the two disagree by more than 1e-9.
double projector_F(const PairState& rho);

/// Projector onto total spin s-1/2 of the (1/2, s) pair, built from the
/// eigenvectors of the pair S^2. Rank 2s.
Eigen::MatrixXd low_spin_projector(TwiceSpin s);

/// Max |[rho, S_z]| and |[rho, S_+]| entry over the pair total-spin generators.
double su2_residual(const PairState& rho);

/// rho^tau2 from the projector decomposition of an SU(2)-invariant pair.
/// Throws ConfigError if su2_residual(rho) > 1e-6.
Eigen::MatrixXd partial_time_reversal(const PairState& rho);

/// Negativity from the spectrum of partial_time_reversal.
double negativity_time_reversal(const PairState& rho);

/// Negativity of any pair state: correlator formula behind the SU(2) gate,
/// partial-transpose spectrum otherwise.
double pair_negativity(const PairState& rho);

}  // namespace ferri

#pragma once

#include <vector>

#include "ferri/density_matrix.hpp"
#include "ferri/lattice.hpp"

namespace ferri {

/// Degeneracy tolerance used wherever levels are grouped.
inline constexpr double kDegeneracyTol = 1e-9;

struct SpectralDecomposition {
  Dims dims;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, same order

  std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
};

/// Diagonalizes H block by block over magnetization sectors (sectors run in
/// parallel) and reassembles eigenvectors in the full basis.
SpectralDecomposition decompose(const LatticeHamiltonian& h);

/// Same, for any real symmetric operator that conserves total S_z on `dims`.
SpectralDecomposition decompose_blocked(const RealOperator& op);

/// Reference path: one dense eigensolve, no blocking, no threads.
SpectralDecomposition decompose_dense(const RealOperator& op);

struct ThermalEnsemble {
  double beta = 0.0;
  Eigen::VectorXd weights;  // Boltzmann probability per eigenstate
  double log_z = 0.0;
};

/// Thermal weights at temperature T (k_B = 1). T = +inf is beta = 0.
ThermalEnsemble ensemble(const SpectralDecomposition& spec, double temperature);
ThermalEnsemble ensemble_at_beta(const SpectralDecomposition& spec, double beta);

/// T = 0: uniform mixture over the ground level. log_z is left at 0.
ThermalEnsemble ground_state_ensemble(const SpectralDecomposition& spec);

/// sum_i w_i <v_i|op|v_i>.
double thermal_expectation(const SpectralDecomposition& spec, const ThermalEnsemble& ens,
                           const RealOperator& op);
/// Complex variant; throws InvariantViolation if the imaginary residue exceeds 1e-12.
double thermal_expectation(const SpectralDecomposition& spec, const ThermalEnsemble& ens,
                           const ComplexOperator& op);

DensityMatrix thermal_density_matrix(const SpectralDecomposition& spec, const ThermalEnsemble& ens);

/// Contiguous runs of eigenvalues equal within kDegeneracyTol, as [begin, end).
std::vector<std::pair<std::size_t, std::size_t>> degenerate_levels(const Eigen::VectorXd& ascending);

}  // namespace ferri

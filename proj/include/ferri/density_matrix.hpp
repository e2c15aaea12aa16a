#pragma once

#include "ferri/spin_algebra.hpp"

namespace ferri {

/// Unit-trace PSD state. Real symmetric storage suffices for every state the
/// Hamiltonians here generate.
struct DensityMatrix {
  Dims dims;
  Eigen::MatrixXd matrix;

  /// Throws InvariantViolation unless trace = 1, symmetric, and
  /// min eigenvalue >= -tol_psd.
  void validate(double tol = 1e-10, double tol_psd = 1e-9) const;
};

/// (spin-1/2, spin-s) reduced state; the spin-1/2 factor is always first.
struct PairState {
  DensityMatrix base;
  TwiceSpin big_spin;

  std::size_t dim() const noexcept { return 2 * big_spin.dim(); }
};

/// Wraps a 2(2s+1) square matrix with dims [2, 2s+1].
PairState make_pair_state(Eigen::MatrixXd matrix, TwiceSpin big_spin);

}  // namespace ferri

#pragma once

#include <cstddef>
#include <vector>

#include "ferri/thermal.hpp"

namespace ferri {

/// Per-level reduced states of one (1/2, s) pair, precomputed from a spectral
/// decomposition so that any temperature costs O(levels * pair_dim^2):
///
///   rho_pair(beta) = sum_l e^{-beta (E_l - E_0)} R_l / sum_l g_l e^{-beta (E_l - E_0)}
///
/// where R_l is the partial trace of the projector onto level l.
class ReducedPairSpectrum {
 public:
  struct Level {
    double energy;
    std::size_t degeneracy;
    Eigen::MatrixXd reduced;  // trace = degeneracy
    double correlator;        // tr(reduced s1.S2)
  };

  ReducedPairSpectrum(const SpectralDecomposition& spec, std::size_t site_a, std::size_t site_b);

  TwiceSpin big_spin() const noexcept { return big_spin_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  PairState pair_state(double beta) const;
  PairState ground_pair_state() const;
  double correlator(double beta) const;
  double ground_correlator() const;
  double log_partition(double beta) const;

 private:
  Eigen::VectorXd level_weights(double beta) const;

  TwiceSpin big_spin_;
  std::vector<Level> levels_;
};

}  // namespace ferri

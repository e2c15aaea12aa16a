#pragma once

#include "ferri/spin_algebra.hpp"

namespace ferri {

/// Kelvin per meV (1 meV / k_B).
inline constexpr double kKelvinPerMeV = 11.6045;

/// The two spectral levels of an isolated (1/2, s) bond, in quarters of J so
/// they stay exact: E0 = -(s+1)/2 = -(2s+2)/4, E1 = s/2 = 2s/4.
struct TwoSiteLevels {
  int ground_quarters;
  int excited_quarters;
  int ground_multiplicity;   // 2s
  int excited_multiplicity;  // 2s + 2

  double ground() const noexcept { return 0.25 * ground_quarters; }
  double excited() const noexcept { return 0.25 * excited_quarters; }
};

/// Exact thermodynamics of H = J s1.S2. All exponentials are evaluated relative
/// to the ground level so beta J up to 1e3 and beyond stays finite.
class TwoSiteAnalytics {
 public:
  /// Throws ConfigError unless coupling > 0.
  explicit TwoSiteAnalytics(TwiceSpin s, double coupling = 1.0);

  TwiceSpin spin() const noexcept { return s_; }
  double coupling() const noexcept { return j_; }

  /// Levels in units of J.
  TwoSiteLevels levels() const noexcept;

  /// 1/(2s+1).
  double ground_negativity() const noexcept;

  /// Z; overflows to +inf for very large beta J, use log_partition_function there.
  double partition_function(double beta) const;
  double log_partition_function(double beta) const;
  /// <s1 . S2> (dimensionless).
  double correlator(double beta) const;
  double thermal_negativity(double beta) const;

  /// Bracket e^{(s+1)bJ/2} - 2(s+1) e^{-s bJ/2}, divided by e^{(s+1)bJ/2}.
  double negativity_bracket(double beta) const;

  /// (2s+1) J / (2 ln(2s+2)), in units of J/k_B scaled by the coupling.
  double threshold_temperature() const noexcept;

 private:
  // e^{-(2s+1) beta J / 2}, the excited-to-ground Boltzmann factor.
  double gap_factor(double beta) const;

  TwiceSpin s_;
  double j_;
};

double ground_negativity(TwiceSpin s);
double threshold_temperature(TwiceSpin s);
/// Threshold in Kelvin for an exchange constant given in meV.
double threshold_in_kelvin(TwiceSpin s, double coupling_mev);

/// Zero-temperature nearest-neighbour correlator -s/2 - delta(s) of a long
/// chain; delta is supplied by the caller.
struct SpinWaveEstimate {
  TwiceSpin s;
  double delta;
};

/// 2 delta / (2s+1). Throws ConfigError unless 0 < delta <= 1/4.
double spin_wave_negativity(const SpinWaveEstimate& est);

}  // namespace ferri

#include "ferri/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ferri/errors.hpp"

namespace ferri {

TwoSiteAnalytics::TwoSiteAnalytics(TwiceSpin s, double coupling) : s_(s), j_(coupling) {
  if (!(coupling > 0.0) || std::isinf(coupling)) throw ConfigError("two-site coupling must be finite and > 0");
}

TwoSiteLevels TwoSiteAnalytics::levels() const noexcept {
  const int t = s_.twice();
  return {-(t + 2), t, t, t + 2};
}

double TwoSiteAnalytics::ground_negativity() const noexcept { return 1.0 / (s_.twice() + 1.0); }

double TwoSiteAnalytics::gap_factor(double beta) const {
  if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
  return std::exp(-(2.0 * s_.value() + 1.0) * beta * j_ / 2.0);
}

double TwoSiteAnalytics::log_partition_function(double beta) const {
  const double s = s_.value();
  const double x = gap_factor(beta);
  return (s + 1.0) * beta * j_ / 2.0 + std::log(2.0 * s + 2.0 * (s + 1.0) * x);
}

double TwoSiteAnalytics::partition_function(double beta) const { return std::exp(log_partition_function(beta)); }

double TwoSiteAnalytics::correlator(double beta) const {
  const double s = s_.value();
  const double x = gap_factor(beta);
  return -s * (s + 1.0) * (1.0 - x) / (2.0 * s + 2.0 * (s + 1.0) * x);
}

double TwoSiteAnalytics::negativity_bracket(double beta) const {
  return 1.0 - 2.0 * (s_.value() + 1.0) * gap_factor(beta);
}

double TwoSiteAnalytics::thermal_negativity(double beta) const {
  const double s = s_.value();
  const double x = gap_factor(beta);
  const double bracket = std::max(0.0, 1.0 - 2.0 * (s + 1.0) * x);
  return 2.0 * s / (2.0 * s + 1.0) * bracket / (2.0 * s + 2.0 * (s + 1.0) * x);
}

double TwoSiteAnalytics::threshold_temperature() const noexcept {
  const double s = s_.value();
  return j_ * (2.0 * s + 1.0) / (2.0 * std::log(2.0 * s + 2.0));
}

double ground_negativity(TwiceSpin s) { return TwoSiteAnalytics(s).ground_negativity(); }

double threshold_temperature(TwiceSpin s) { return TwoSiteAnalytics(s).threshold_temperature(); }

double threshold_in_kelvin(TwiceSpin s, double coupling_mev) {
  if (!(coupling_mev > 0.0)) throw ConfigError("coupling in meV must be > 0");
  return threshold_temperature(s) * coupling_mev * kKelvinPerMeV;
}

double spin_wave_negativity(const SpinWaveEstimate& est) {
  if (!(est.delta > 0.0 && est.delta <= 0.25))
    throw ConfigError("spin-wave delta must lie in (0, 1/4], got " + std::to_string(est.delta));
  const double s = est.s.value();
  const double c0 = -s / 2.0 - est.delta;
  return std::max(0.0, -(s + 2.0 * c0) / (2.0 * s + 1.0));
}

}  // namespace ferri

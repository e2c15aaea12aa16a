#include <algorithm>
#include <cmath>
#include <string>

#include "ferri/errors.hpp"
#include "ferri/sweep.hpp"

namespace ferri {

double solve_threshold(const ReducedPairSpectrum& pair, const ThresholdOptions& opts) {
  if (!(opts.tolerance > 0.0)) throw ConfigError("threshold tolerance must be > 0");
  if (!(opts.t_start > 0.0)) throw ConfigError("threshold search must start at T > 0");
  if (!(opts.t_ceiling > opts.t_start)) throw ConfigError("threshold ceiling must exceed the start temperature");

  const double s = pair.big_spin().value();
  // The bracket of the correlator formula before the max(0, .) is applied.
  const auto bracket = [&](double t) { return -(s + 2.0 * pair.correlator(1.0 / t)) / (2.0 * s + 1.0); };

  if (!(bracket(opts.t_start) > 0.0))
    throw ThresholdNotFound("pair is not entangled at the start temperature " + format_real(opts.t_start));

  double lo = opts.t_start;
  double hi = opts.t_start;
  while (bracket(hi) > 0.0) {
    lo = hi;
    if (hi >= opts.t_ceiling)
      throw ThresholdNotFound("no threshold located <= " + format_real(opts.t_ceiling));
    hi = std::min(2.0 * hi, opts.t_ceiling);
  }
  while (hi - lo > opts.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (bracket(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double solve_threshold(TwiceSpin s, int cells, Boundary boundary, const ThresholdOptions& opts,
                       double coupling) {
  const ChainSpec spec{cells, s, coupling, boundary};
  const auto h = build_hamiltonian(spec);
  return solve_threshold(ReducedPairSpectrum(decompose(h), 0, 1), opts);
}

}  // namespace ferri

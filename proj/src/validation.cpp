#include <algorithm>
#include <cmath>

#include "ferri/entanglement.hpp"
#include "ferri/sweep.hpp"

namespace ferri {

double ValidationCase::disagreement() const noexcept {
  const double a = std::abs(negativity_transpose - negativity_time_reversal);
  const double b = std::abs(negativity_transpose - negativity_formula);
  const double c = std::abs(negativity_time_reversal - negativity_formula);
  return std::max({a, b, c});
}

bool ValidationCase::multiplicity_ok() const noexcept {
  if (negativity_transpose <= 1e-8) return true;
  return negative_eigenvalues == twice_s && negative_spread <= 1e-9;
}

double ValidationReport::max_disagreement() const noexcept {
  double worst = 0.0;
  for (const auto& c : cases) worst = std::max(worst, c.disagreement());
  return worst;
}

bool ValidationReport::passed(double tol) const noexcept {
  return std::all_of(cases.begin(), cases.end(),
                     [tol](const ValidationCase& c) { return c.disagreement() <= tol && c.multiplicity_ok(); });
}

ValidationReport validate_three_way(const std::vector<int>& twice_s, const std::vector<int>& cells,
                                    const std::vector<double>& temperatures) {
  ValidationReport report;
  for (int n_cells : cells)
    for (int ts : twice_s) {
      const TwiceSpin s(ts);
      const auto spec = n_cells == 1 ? ChainSpec::two_site(s) : ChainSpec::ring(n_cells, s);
      const auto decomposition = decompose(build_hamiltonian(spec));
      for (double t : temperatures) {
        const auto rho = thermal_density_matrix(decomposition, ensemble(decomposition, t));
        const auto pair = partial_trace(rho, 0, 1);
        const auto numeric = negativity_numeric(pair);

        ValidationCase c;
        c.twice_s = ts;
        c.sites = spec.sites();
        c.temperature = t;
        c.negativity_transpose = numeric.negativity;
        c.negativity_time_reversal = negativity_time_reversal(pair);
        c.negativity_formula = negativity_su2(su2_correlator(pair), s);
        double lo = 0.0;
        double hi = -1.0;
        for (Eigen::Index i = 0; i < numeric.spectrum.size(); ++i) {
          const double v = numeric.spectrum(i);
          if (v >= -1e-12) continue;
          if (c.negative_eigenvalues == 0) lo = hi = v;
          lo = std::min(lo, v);
          hi = std::max(hi, v);
          ++c.negative_eigenvalues;
        }
        c.negative_spread = c.negative_eigenvalues > 0 ? hi - lo : 0.0;
        report.cases.push_back(c);
      }
    }
  return report;
}

}  // namespace ferri

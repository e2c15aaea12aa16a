#include "ferri/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <set>
#include <string>

#include <omp.h>

#include "ferri/closed_forms.hpp"
#include "ferri/dimension_cap.hpp"
#include "ferri/entanglement.hpp"
#include "ferri/errors.hpp"

namespace ferri {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::analytic: return "analytic";
    case Method::numeric: return "numeric";
    case Method::both: return "both";
  }
  return "?";
}

std::string_view to_string(Format f) noexcept { return f == Format::csv ? "csv" : "json"; }

Method parse_method(std::string_view text) {
  if (text == "analytic") return Method::analytic;
  if (text == "numeric") return Method::numeric;
  if (text == "both") return Method::both;
  throw ConfigError("unknown method '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ConfigError("unknown format '" + std::string(text) + "'");
}

void SweepConfig::validate() const {
  if (twice_s_list.empty()) throw ConfigError("at least one spin value is required");
  std::set<int> seen;
  for (auto s : twice_s_list)
    if (!seen.insert(s.twice()).second) throw ConfigError("duplicate spin 2s=" + std::to_string(s.twice()));
  if (!(t_min > 0.0) || !std::isfinite(t_min)) throw ConfigError("t_min must be finite and > 0");
  if (!(t_max > t_min) || !std::isfinite(t_max)) throw ConfigError("t_max must be finite and > t_min");
  if (t_steps < 2) throw ConfigError("t_steps must be >= 2");
  if (!std::isfinite(coupling) || coupling == 0.0) throw ConfigError("coupling must be finite and nonzero");
  if (method != Method::numeric) {
    if (cells != 1 || boundary != Boundary::single_bond)
      throw ConfigError("analytic results exist only for the two-site model (cells = 1, single-bond)");
    if (!(coupling > 0.0)) throw ConfigError("analytic results require an antiferromagnetic coupling > 0");
  }
  chain(twice_s_list.front()).validate();
}

std::vector<double> SweepConfig::temperatures() const {
  std::vector<double> grid(static_cast<std::size_t>(t_steps));
  const double step = (t_max - t_min) / (t_steps - 1);
  for (int i = 0; i < t_steps; ++i) grid[static_cast<std::size_t>(i)] = t_min + step * i;
  grid.back() = t_max;
  return grid;
}

ChainSpec SweepConfig::chain(TwiceSpin s) const { return ChainSpec{cells, s, coupling, boundary}; }

namespace {

using Clock = std::chrono::steady_clock;

bool wants_numeric(Method m) { return m != Method::analytic; }
bool wants_analytic(Method m) { return m != Method::numeric; }

void check_sweep_dimensions(const SweepConfig& cfg) {
  if (!wants_numeric(cfg.method)) return;
  for (auto s : cfg.twice_s_list)
    check_dimension(cfg.chain(s).dimension(), "sweep at 2s=" + std::to_string(s.twice()));
}

Record analytic_record(TwiceSpin s, double temperature, double coupling) {
  const TwoSiteAnalytics two_site(s, coupling);
  const double beta = 1.0 / temperature;
  return {s.twice(), temperature, two_site.correlator(beta), two_site.thermal_negativity(beta), Method::analytic, {}};
}

Record numeric_record(TwiceSpin s, double temperature, const PairState& pair) {
  return {s.twice(), temperature, su2_correlator(pair), negativity_numeric(pair).negativity, Method::numeric, {}};
}

// Appends the records of one grid point in canonical order (analytic first).
void point_records(const SweepConfig& cfg, TwiceSpin s, double temperature, const PairState* pair,
                   std::vector<Record>& out) {
  std::optional<Record> analytic;
  if (wants_analytic(cfg.method)) analytic = analytic_record(s, temperature, cfg.coupling);
  if (analytic) out.push_back(*analytic);
  if (pair != nullptr) {
    auto rec = numeric_record(s, temperature, *pair);
    if (analytic) rec.abs_difference = std::abs(analytic->negativity - rec.negativity);
    out.push_back(rec);
  }
}

SweepResult finish(const SweepConfig& cfg, std::vector<Record> records, Clock::time_point start) {
  SweepResult result;
  result.metadata.config = cfg;
  std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    if (a.twice_s != b.twice_s) return a.twice_s < b.twice_s;
    if (a.temperature != b.temperature) return a.temperature < b.temperature;
    return a.method < b.method;
  });
  if (cfg.method == Method::both) {
    double worst = 0.0;
    for (const auto& r : records)
      if (r.abs_difference) worst = std::max(worst, *r.abs_difference);
    result.metadata.max_abs_difference = worst;
  }
  if (cfg.cells == 1 && cfg.boundary == Boundary::single_bond && cfg.coupling > 0.0) {
    std::vector<TwiceSpin> spins = cfg.twice_s_list;
    std::sort(spins.begin(), spins.end());
    for (auto s : spins)
      result.metadata.thresholds.push_back({s.twice(), TwoSiteAnalytics(s, cfg.coupling).threshold_temperature()});
  }
  result.records = std::move(records);
  result.metadata.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg, int jobs) {
  cfg.validate();
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  check_sweep_dimensions(cfg);
  const auto start = Clock::now();

  const auto temps = cfg.temperatures();
  const auto n_spins = static_cast<std::ptrdiff_t>(cfg.twice_s_list.size());
  const auto n_temps = static_cast<std::ptrdiff_t>(temps.size());

  // Decompositions first: one per spin value, shared read-only afterwards.
  std::vector<std::optional<ReducedPairSpectrum>> spectra(cfg.twice_s_list.size());
  std::vector<std::exception_ptr> errors(cfg.twice_s_list.size());
  if (wants_numeric(cfg.method)) {
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n_spins; ++k) {
      try {
        const auto s = cfg.twice_s_list[static_cast<std::size_t>(k)];
        const auto h = build_hamiltonian(cfg.chain(s));
        spectra[static_cast<std::size_t>(k)].emplace(decompose(h), 0, 1);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  const auto n_points = n_spins * n_temps;
  std::vector<std::vector<Record>> slots(static_cast<std::size_t>(n_points));
  std::vector<std::exception_ptr> point_errors(static_cast<std::size_t>(n_points));
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < n_points; ++p) {
    try {
      const auto k = static_cast<std::size_t>(p / n_temps);
      const double temperature = temps[static_cast<std::size_t>(p % n_temps)];
      const auto s = cfg.twice_s_list[k];
      std::optional<PairState> pair;
      if (spectra[k]) pair = spectra[k]->pair_state(1.0 / temperature);
      point_records(cfg, s, temperature, pair ? &*pair : nullptr, slots[static_cast<std::size_t>(p)]);
    } catch (...) {
      point_errors[static_cast<std::size_t>(p)] = std::current_exception();
    }
  }
  for (const auto& e : point_errors)
    if (e) std::rethrow_exception(e);

  std::vector<Record> records;
  for (auto& slot : slots) records.insert(records.end(), slot.begin(), slot.end());
  return finish(cfg, std::move(records), start);
}

SweepResult run_sweep_reference(const SweepConfig& cfg) {
  cfg.validate();
  check_sweep_dimensions(cfg);
  const auto start = Clock::now();
  std::vector<Record> records;
  for (auto s : cfg.twice_s_list)
    for (double temperature : cfg.temperatures()) {
      std::optional<PairState> pair;
      if (wants_numeric(cfg.method)) {
        const auto h = build_hamiltonian(cfg.chain(s));
        const auto spec = decompose_dense(h.matrix);
        const auto rho = thermal_density_matrix(spec, ensemble(spec, temperature));
        pair = partial_trace(rho, 0, 1);
      }
      point_records(cfg, s, temperature, pair ? &*pair : nullptr, records);
    }
  return finish(cfg, std::move(records), start);
}

}  // namespace ferri

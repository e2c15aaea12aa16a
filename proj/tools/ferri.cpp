// ferri: thermal negativity sweeps for alternating spin-1/2 / spin-s rings.
//
//   ferri two-site  --twice-spin 1,2,3            closed-form curves + thresholds
//   ferri ring      --cells 2 --twice-spin 1,2,3  exact-diagonalization sweep
//   ferri threshold --cells 2 --twice-spin 1      bisection on the correlator formula
//   ferri validate                                three-way negativity agreement
//
// Exit codes: 0 ok, 1 validation failed, 2 invalid config, 3 dimension cap
// exceeded, 4 threshold not found.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ferri/closed_forms.hpp"
#include "ferri/dimension_cap.hpp"
#include "ferri/errors.hpp"
#include "ferri/sweep.hpp"

namespace {

constexpr int kExitValidationFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDimensionCap = 3;
constexpr int kExitThreshold = 4;

struct Options {
  std::vector<int> twice_spin;
  int cells = 2;
  std::string boundary = "auto";
  double t_min = 0.05;
  double t_max = 3.0;
  int steps = 60;
  double coupling = 1.0;
  std::string format = "csv";
  std::string out = "-";
  std::size_t dim_cap = 0;
  int jobs = 1;
  double tolerance = 1e-9;
  double ceiling = 1e4;
  std::vector<int> cells_list{1, 2};
  std::vector<double> temperatures{0.1, 0.5, 1.0, 2.0, 5.0};
};

std::vector<ferri::TwiceSpin> spins(const std::vector<int>& raw) {
  std::vector<ferri::TwiceSpin> out;
  for (int t : raw) out.emplace_back(t);
  return out;
}

ferri::Boundary resolve_boundary(const std::string& text, int cells) {
  if (text == "auto") return cells == 1 ? ferri::Boundary::single_bond : ferri::Boundary::ring;
  return ferri::parse_boundary(text);
}

void add_grid_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--tmin", o.t_min, "lowest temperature (J/k_B)");
  cmd->add_option("--tmax", o.t_max, "highest temperature (J/k_B)");
  cmd->add_option("--steps", o.steps, "number of grid points, linear in T");
  cmd->add_option("--coupling", o.coupling, "exchange constant J");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output path, - for stdout");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

int run_sweep_command(const Options& o, int cells, ferri::Boundary boundary, ferri::Method method) {
  ferri::SweepConfig cfg;
  cfg.twice_s_list = spins(o.twice_spin);
  cfg.cells = cells;
  cfg.boundary = boundary;
  cfg.t_min = o.t_min;
  cfg.t_max = o.t_max;
  cfg.t_steps = o.steps;
  cfg.method = method;
  cfg.format = ferri::parse_format(o.format);
  cfg.coupling = o.coupling;

  const auto result = ferri::run_sweep(cfg, o.jobs);
  ferri::write_output(o.out, ferri::emit(result, cfg.format));
  for (const auto& t : result.metadata.thresholds)
    std::cerr << "threshold 2s=" << t.twice_s << " T_th=" << ferri::format_real(t.temperature) << "\n";
  if (result.metadata.max_abs_difference)
    std::cerr << "max |analytic - numeric| = " << ferri::format_real(*result.metadata.max_abs_difference) << "\n";
  return 0;
}

int run_threshold_command(const Options& o) {
  const auto boundary = resolve_boundary(o.boundary, o.cells);
  const bool two_site = o.cells == 1 && boundary == ferri::Boundary::single_bond && o.coupling > 0.0;
  ferri::ThresholdOptions opts;
  opts.tolerance = o.tolerance;
  opts.t_start = o.t_min;
  opts.t_ceiling = o.ceiling;

  std::string csv = "twice_s,cells,boundary,threshold,closed_form\n";
  nlohmann::json rows = nlohmann::json::array();
  for (auto s : spins(o.twice_spin)) {
    const double t = ferri::solve_threshold(s, o.cells, boundary, opts, o.coupling);
    const double closed = two_site ? ferri::TwoSiteAnalytics(s, o.coupling).threshold_temperature() : 0.0;
    csv += std::to_string(s.twice()) + "," + std::to_string(o.cells) + "," + std::string(ferri::to_string(boundary)) +
           "," + ferri::format_real(t) + "," + (two_site ? ferri::format_real(closed) : std::string()) + "\n";
    nlohmann::json row = {{"twice_s", s.twice()},
                          {"cells", o.cells},
                          {"boundary", std::string(ferri::to_string(boundary))},
                          {"threshold", t}};
    if (two_site) row["closed_form"] = closed;
    rows.push_back(std::move(row));
  }
  const auto bytes = o.format == "json" ? nlohmann::json{{"thresholds", rows}}.dump(2) + "\n" : csv;
  ferri::write_output(o.out, bytes);
  return 0;
}

int run_validate_command(const Options& o) {
  const auto report = ferri::validate_three_way(o.twice_spin, o.cells_list, o.temperatures);
  for (const auto& c : report.cases) {
    std::cout << "L=" << c.sites << " 2s=" << c.twice_s << " T=" << ferri::format_real(c.temperature)
              << " N_T2=" << ferri::format_real(c.negativity_transpose)
              << " N_tau2=" << ferri::format_real(c.negativity_time_reversal)
              << " N_formula=" << ferri::format_real(c.negativity_formula) << " negatives=" << c.negative_eigenvalues
              << (c.disagreement() <= 1e-9 && c.multiplicity_ok() ? " ok" : " FAIL") << "\n";
  }
  const bool ok = report.passed(1e-9);
  std::cout << "max disagreement " << ferri::format_real(report.max_disagreement()) << " over "
            << report.cases.size() << " states: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : kExitValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal entanglement in spin-1/2 / spin-s ferrimagnetic rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--dim-cap", o.dim_cap, "maximum Hilbert-space dimension (env FERRI_DIM_CAP)");

  auto* two_site = app.add_subcommand("two-site", "two-site curves from the closed forms (plus thresholds)");
  two_site->add_option("--twice-spin", o.twice_spin, "values of 2s")->delimiter(',');
  std::string two_site_method = "analytic";
  two_site->add_option("--method", two_site_method, "analytic, numeric or both")
      ->check(CLI::IsMember({"analytic", "numeric", "both"}));
  add_grid_options(two_site, o);

  auto* ring = app.add_subcommand("ring", "numeric sweep on a ring or chain");
  ring->add_option("--twice-spin", o.twice_spin, "values of 2s")->delimiter(',');
  ring->add_option("--cells", o.cells, "unit cells N (L = 2N sites)")->check(CLI::PositiveNumber);
  ring->add_option("--boundary", o.boundary, "auto, ring, open or single-bond");
  std::string ring_method = "numeric";
  ring->add_option("--method", ring_method, "numeric (analytic/both need cells = 1)")
      ->check(CLI::IsMember({"analytic", "numeric", "both"}));
  add_grid_options(ring, o);

  auto* threshold = app.add_subcommand("threshold", "locate the threshold temperature");
  threshold->add_option("--twice-spin", o.twice_spin, "values of 2s")->delimiter(',');
  threshold->add_option("--cells", o.cells, "unit cells N")->check(CLI::PositiveNumber);
  threshold->add_option("--boundary", o.boundary, "auto, ring, open or single-bond");
  threshold->add_option("--coupling", o.coupling, "exchange constant J");
  threshold->add_option("--tmin", o.t_min, "start of the doubling search");
  threshold->add_option("--ceiling", o.ceiling, "give up above this temperature");
  threshold->add_option("--tolerance", o.tolerance, "final bracket width");
  threshold->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  threshold->add_option("--out", o.out, "output path, - for stdout");

  auto* validate = app.add_subcommand("validate", "partial transpose vs time reversal vs correlator formula");
  validate->add_option("--twice-spin", o.twice_spin, "values of 2s (default 1..6)")->delimiter(',');
  validate->add_option("--cells", o.cells_list, "unit-cell counts (default 1,2)")->delimiter(',');
  validate->add_option("--temperatures", o.temperatures, "temperatures")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (const char* env = std::getenv("FERRI_DIM_CAP"); env != nullptr && o.dim_cap == 0)
      o.dim_cap = std::stoul(env);
    if (o.dim_cap != 0) ferri::set_dimension_cap(o.dim_cap);

    if (*two_site) {
      if (o.twice_spin.empty()) o.twice_spin = {1, 2, 3};
      return run_sweep_command(o, 1, ferri::Boundary::single_bond, ferri::parse_method(two_site_method));
    }
    if (*ring) {
      if (o.twice_spin.empty()) o.twice_spin = {1, 2, 3};
      return run_sweep_command(o, o.cells, resolve_boundary(o.boundary, o.cells), ferri::parse_method(ring_method));
    }
    if (*threshold) {
      if (o.twice_spin.empty()) o.twice_spin = {1, 2, 3};
      if (threshold->count("--cells") == 0) o.cells = 1;
      return run_threshold_command(o);
    }
    if (o.twice_spin.empty()) o.twice_spin = {1, 2, 3, 4, 5, 6};
    return run_validate_command(o);
  } catch (const ferri::DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimensionCap;
  } catch (const ferri::ThresholdNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitThreshold;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
}

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ferri/lattice.hpp"
#include "ferri/pair_spectrum.hpp"

namespace ferri {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Method { analytic, numeric, both };
enum class Format { csv, json };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Format f) noexcept;
Method parse_method(std::string_view text);
Format parse_format(std::string_view text);

struct SweepConfig {
  std::vector<TwiceSpin> twice_s_list;
  int cells = 1;
  Boundary boundary = Boundary::single_bond;
  double t_min = 0.05;
  double t_max = 3.0;
  int t_steps = 60;
  Method method = Method::numeric;
  Format format = Format::csv;
  double coupling = 1.0;

  /// Throws ConfigError for an invalid grid or an illegal method/lattice pair.
  void validate() const;
  /// Linear grid t_min .. t_max inclusive.
  std::vector<double> temperatures() const;
  ChainSpec chain(TwiceSpin s) const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct Record {
  int twice_s = 1;
  double temperature = 0.0;
  double correlator = 0.0;
  double negativity = 0.0;
  Method method = Method::numeric;  // never `both`
  /// |analytic - numeric| negativity; set on numeric records of a `both` sweep.
  std::optional<double> abs_difference;

  friend bool operator==(const Record&, const Record&) = default;
};

struct ThresholdEntry {
  int twice_s = 1;
  double temperature = 0.0;

  friend bool operator==(const ThresholdEntry&, const ThresholdEntry&) = default;
};

struct SweepMetadata {
  SweepConfig config;
  std::string tool_version{kToolVersion};
  double wall_time_seconds = 0.0;
  /// Closed-form thresholds, filled for two-site sweeps.
  std::vector<ThresholdEntry> thresholds;
  std::optional<double> max_abs_difference;

  friend bool operator==(const SweepMetadata&, const SweepMetadata&) = default;
};

struct SweepResult {
  SweepMetadata metadata;
  std::vector<Record> records;  // sorted by (twice_s, temperature, method)

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// OpenMP sweep: one decomposition per spin value, grid points evaluated
/// concurrently on at most `jobs` threads. Output does not depend on `jobs`.
SweepResult run_sweep(const SweepConfig& cfg, int jobs = 1);

/// Serial reference: rebuilds and rediagonalizes the Hamiltonian densely at
/// every grid point and goes through the full thermal density matrix.
SweepResult run_sweep_reference(const SweepConfig& cfg);

struct ThresholdOptions {
  double tolerance = 1e-9;   // final bracket width
  double t_start = 0.05;     // doubling starts here; must be entangled
  double t_ceiling = 1e4;    // give up above this
};

/// Temperature where -(s + 2c(T))/(2s+1) changes sign, by doubling then bisection.
double solve_threshold(const ReducedPairSpectrum& pair, const ThresholdOptions& opts = {});
double solve_threshold(TwiceSpin s, int cells, Boundary boundary, const ThresholdOptions& opts = {},
                       double coupling = 1.0);

struct ValidationCase {
  int twice_s = 1;
  std::size_t sites = 2;
  double temperature = 0.0;
  double negativity_transpose = 0.0;
  double negativity_time_reversal = 0.0;
  double negativity_formula = 0.0;
  int negative_eigenvalues = 0;
  double negative_spread = 0.0;  // max - min over the negative eigenvalues

  double disagreement() const noexcept;
  /// 2s negative eigenvalues, equal within 1e-9, whenever N > 1e-8.
  bool multiplicity_ok() const noexcept;
};

struct ValidationReport {
  std::vector<ValidationCase> cases;

  double max_disagreement() const noexcept;
  bool passed(double tol = 1e-9) const noexcept;
};

/// Three-way negativity agreement on thermal pair states (pair = sites 0, 1).
/// cells = 1 uses the single bond, larger cells the ring.
ValidationReport validate_three_way(const std::vector<int>& twice_s, const std::vector<int>& cells,
                                    const std::vector<double>& temperatures);

std::string emit_csv(const SweepResult& result);
std::string emit_json(const SweepResult& result);
std::string emit(const SweepResult& result, Format format);
/// Inverse of emit_json. Throws ConfigError on malformed input.
SweepResult parse_json(std::string_view text);

/// Writes bytes to `path`, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& bytes);

/// Fixed 12-significant-digit rendering used by every text output.
std::string format_real(double value);

}  // namespace ferri

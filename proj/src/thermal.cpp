#include "ferri/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <string>

#include "ferri/dimension_cap.hpp"
#include "ferri/errors.hpp"

namespace ferri {

namespace {

struct SectorResult {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

SectorResult solve_sector(const Eigen::MatrixXd& block, int twice_m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
  if (solver.info() != Eigen::Success) throw EigensolverError(twice_m, static_cast<std::size_t>(block.rows()));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace

SpectralDecomposition decompose_dense(const RealOperator& op) {
  check_shape(op);
  check_dimension(op.side(), "decompose");
  auto [values, vectors] = solve_sector(op.matrix, std::numeric_limits<int>::min());
  return {op.dims, std::move(values), std::move(vectors)};
}

SpectralDecomposition decompose_blocked(const RealOperator& op) {
  check_shape(op);
  check_dimension(op.side(), "decompose");
  const auto sectors = magnetization_sectors(op.dims);
  const auto n_sectors = static_cast<std::ptrdiff_t>(sectors.size());

  std::vector<SectorResult> results(sectors.size());
  std::vector<std::exception_ptr> errors(sectors.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n_sectors; ++s) {
    const auto& sec = sectors[static_cast<std::size_t>(s)];
    try {
      const auto n = static_cast<Eigen::Index>(sec.indices.size());
      Eigen::MatrixXd block(n, n);
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
          block(r, c) = op.matrix(static_cast<Eigen::Index>(sec.indices[static_cast<std::size_t>(r)]),
                                  static_cast<Eigen::Index>(sec.indices[static_cast<std::size_t>(c)]));
      results[static_cast<std::size_t>(s)] = solve_sector(block, sec.twice_m);
    } catch (...) {
      errors[static_cast<std::size_t>(s)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  struct Slot {
    double value;
    std::size_t sector;
    Eigen::Index column;
  };
  std::vector<Slot> slots;
  slots.reserve(op.side());
  for (std::size_t s = 0; s < sectors.size(); ++s)
    for (Eigen::Index c = 0; c < results[s].values.size(); ++c) slots.push_back({results[s].values(c), s, c});
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.value < b.value; });

  const auto n = static_cast<Eigen::Index>(op.side());
  SpectralDecomposition out{op.dims, Eigen::VectorXd(n), Eigen::MatrixXd::Zero(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& slot = slots[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = slot.value;
    const auto& idx = sectors[slot.sector].indices;
    const auto& vecs = results[slot.sector].vectors;
    for (std::size_t r = 0; r < idx.size(); ++r)
      out.eigenvectors(static_cast<Eigen::Index>(idx[r]), k) = vecs(static_cast<Eigen::Index>(r), slot.column);
  }
  return out;
}

SpectralDecomposition decompose(const LatticeHamiltonian& h) { return decompose_blocked(h.matrix); }

std::vector<std::pair<std::size_t, std::size_t>> degenerate_levels(const Eigen::VectorXd& ascending) {
  std::vector<std::pair<std::size_t, std::size_t>> levels;
  const auto n = static_cast<std::size_t>(ascending.size());
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n && ascending(static_cast<Eigen::Index>(end)) - ascending(static_cast<Eigen::Index>(begin)) <=
                          kDegeneracyTol)
      ++end;
    levels.emplace_back(begin, end);
    begin = end;
  }
  return levels;
}

ThermalEnsemble ensemble_at_beta(const SpectralDecomposition& spec, double beta) {
  if (!(beta >= 0.0) || std::isinf(beta)) throw ConfigError("beta must be finite and >= 0");
  if (spec.size() == 0) throw ConfigError("empty spectrum");
  const double e_min = spec.eigenvalues(0);
  Eigen::VectorXd w = (-beta * (spec.eigenvalues.array() - e_min)).exp();
  const double sum = w.sum();
  w /= sum;
  return {beta, std::move(w), std::log(sum) - beta * e_min};
}

ThermalEnsemble ensemble(const SpectralDecomposition& spec, double temperature) {
  if (std::isnan(temperature) || temperature <= 0.0)
    throw ConfigError("temperature must be > 0 (use ground_state_ensemble for T = 0)");
  return ensemble_at_beta(spec, std::isinf(temperature) ? 0.0 : 1.0 / temperature);
}

ThermalEnsemble ground_state_ensemble(const SpectralDecomposition& spec) {
  if (spec.size() == 0) throw ConfigError("empty spectrum");
  const auto [begin, end] = degenerate_levels(spec.eigenvalues).front();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(spec.eigenvalues.size());
  w.segment(static_cast<Eigen::Index>(begin), static_cast<Eigen::Index>(end - begin))
      .setConstant(1.0 / static_cast<double>(end - begin));
  return {std::numeric_limits<double>::infinity(), std::move(w), 0.0};
}

namespace {

template <typename Scalar>
Scalar weighted_diagonal(const SpectralDecomposition& spec, const ThermalEnsemble& ens,
                         const Operator<Scalar>& op) {
  check_shape(op);
  if (op.side() != spec.size() || ens.weights.size() != spec.eigenvalues.size())
    throw ConfigError("thermal_expectation: dimension mismatch");
  Scalar acc(0);
  for (Eigen::Index i = 0; i < ens.weights.size(); ++i) {
    const double w = ens.weights(i);
    if (w == 0.0) continue;
    const auto v = spec.eigenvectors.col(i).template cast<Scalar>();
    acc += w * v.dot(op.matrix * v);
  }
  return acc;
}

}  // namespace

double thermal_expectation(const SpectralDecomposition& spec, const ThermalEnsemble& ens,
                           const RealOperator& op) {
  return weighted_diagonal(spec, ens, op);
}

double thermal_expectation(const SpectralDecomposition& spec, const ThermalEnsemble& ens,
                           const ComplexOperator& op) {
  const auto value = weighted_diagonal(spec, ens, op);
  if (std::abs(value.imag()) > 1e-12)
    throw InvariantViolation("thermal expectation has imaginary part " + std::to_string(value.imag()));
  return value.real();
}

DensityMatrix thermal_density_matrix(const SpectralDecomposition& spec, const ThermalEnsemble& ens) {
  check_dimension(spec.size(), "thermal_density_matrix");
  if (ens.weights.size() != spec.eigenvalues.size()) throw ConfigError("thermal_density_matrix: size mismatch");
  const Eigen::MatrixXd scaled = spec.eigenvectors * ens.weights.asDiagonal();
  return {spec.dims, scaled * spec.eigenvectors.transpose()};
}

}  // namespace ferri

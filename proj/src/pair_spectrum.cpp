#include "ferri/pair_spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "ferri/errors.hpp"

namespace ferri {

namespace {

TwiceSpin pair_spin(const Dims& dims, std::size_t a, std::size_t b, std::size_t& first, std::size_t& second) {
  if (a >= dims.size() || b >= dims.size()) throw std::out_of_range("pair site out of range");
  if (a == b) throw ConfigError("pair sites must differ");
  if (dims[a] == 2) {
    first = a;
    second = b;
  } else if (dims[b] == 2) {
    first = b;
    second = a;
  } else {
    throw ConfigError("pair has no spin-1/2 factor");
  }
  return spin_of_dimension(dims[second]);
}

}  // namespace

ReducedPairSpectrum::ReducedPairSpectrum(const SpectralDecomposition& spec, std::size_t site_a,
                                         std::size_t site_b)
    : big_spin_(TwiceSpin::half()) {
  std::size_t first = 0;
  std::size_t second = 0;
  big_spin_ = pair_spin(spec.dims, site_a, site_b, first, second);

  const auto& dims = spec.dims;
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];

  std::vector<std::size_t> keep_off;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t m = 0; m < dims[second]; ++m) keep_off.push_back(x * strides[first] + m * strides[second]);
  std::vector<std::size_t> env_off{0};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k == first || k == second) continue;
    std::vector<std::size_t> next;
    for (auto base : env_off)
      for (std::size_t v = 0; v < dims[k]; ++v) next.push_back(base + v * strides[k]);
    env_off = std::move(next);
  }

  const auto pair_dim = static_cast<Eigen::Index>(keep_off.size());
  const auto env_dim = static_cast<Eigen::Index>(env_off.size());
  const auto bond = dot_coupling(0, 1, {2, big_spin_.dim()});
  const auto ranges = degenerate_levels(spec.eigenvalues);
  levels_.resize(ranges.size());
  const auto n_levels = static_cast<std::ptrdiff_t>(ranges.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t l = 0; l < n_levels; ++l) {
    const auto [begin, end] = ranges[static_cast<std::size_t>(l)];
    Eigen::MatrixXd reduced = Eigen::MatrixXd::Zero(pair_dim, pair_dim);
    Eigen::MatrixXd amplitudes(pair_dim, env_dim);
    for (std::size_t i = begin; i < end; ++i) {
      const auto v = spec.eigenvectors.col(static_cast<Eigen::Index>(i));
      for (Eigen::Index p = 0; p < pair_dim; ++p)
        for (Eigen::Index e = 0; e < env_dim; ++e)
          amplitudes(p, e) = v(static_cast<Eigen::Index>(keep_off[static_cast<std::size_t>(p)] +
                                                         env_off[static_cast<std::size_t>(e)]));
      reduced.noalias() += amplitudes * amplitudes.transpose();
    }
    const double corr = reduced.cwiseProduct(bond.matrix).sum();
    levels_[static_cast<std::size_t>(l)] =
        Level{spec.eigenvalues(static_cast<Eigen::Index>(begin)), end - begin, std::move(reduced), corr};
  }
}

Eigen::VectorXd ReducedPairSpectrum::level_weights(double beta) const {
  if (!(beta >= 0.0) || std::isinf(beta)) throw ConfigError("beta must be finite and >= 0");
  const double e0 = levels_.front().energy;
  Eigen::VectorXd w(static_cast<Eigen::Index>(levels_.size()));
  for (std::size_t l = 0; l < levels_.size(); ++l)
    w(static_cast<Eigen::Index>(l)) = std::exp(-beta * (levels_[l].energy - e0));
  return w;
}

PairState ReducedPairSpectrum::pair_state(double beta) const {
  const auto w = level_weights(beta);
  const auto n = levels_.front().reduced.rows();
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(n, n);
  double z = 0.0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    rho += w(static_cast<Eigen::Index>(l)) * levels_[l].reduced;
    z += w(static_cast<Eigen::Index>(l)) * static_cast<double>(levels_[l].degeneracy);
  }
  return make_pair_state(rho / z, big_spin_);
}

PairState ReducedPairSpectrum::ground_pair_state() const {
  const auto& g = levels_.front();
  return make_pair_state(g.reduced / static_cast<double>(g.degeneracy), big_spin_);
}

double ReducedPairSpectrum::correlator(double beta) const {
  const auto w = level_weights(beta);
  double num = 0.0;
  double z = 0.0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    num += w(static_cast<Eigen::Index>(l)) * levels_[l].correlator;
    z += w(static_cast<Eigen::Index>(l)) * static_cast<double>(levels_[l].degeneracy);
  }
  return num / z;
}

double ReducedPairSpectrum::ground_correlator() const {
  const auto& g = levels_.front();
  return g.correlator / static_cast<double>(g.degeneracy);
}

double ReducedPairSpectrum::log_partition(double beta) const {
  const auto w = level_weights(beta);
  double z = 0.0;
  for (std::size_t l = 0; l < levels_.size(); ++l)
    z += w(static_cast<Eigen::Index>(l)) * static_cast<double>(levels_[l].degeneracy);
  return std::log(z) - beta * levels_.front().energy;
}

}  // namespace ferri

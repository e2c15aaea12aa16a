#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ferri/entanglement.hpp"
#include "ferri/errors.hpp"
#include "ferri/pair_spectrum.hpp"
#include "ferri/thermal.hpp"
#include "oracle.hpp"

using namespace ferri;

namespace {

// Two-site partition function summed over the oracle spectrum.
double brute_force_z(int twice_s, double beta) {
  const auto ev = oracle::spectrum(oracle::chain_hamiltonian(1, twice_s, false));
  double z = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) z += std::exp(-beta * ev(i));
  return z;
}

double brute_force_energy(int twice_s, double beta) {
  const auto ev = oracle::spectrum(oracle::chain_hamiltonian(1, twice_s, false));
  double z = 0.0;
  double e = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    z += std::exp(-beta * ev(i));
    e += ev(i) * std::exp(-beta * ev(i));
  }
  return e / z;
}

}  // namespace

TEST(Decompose, TwoSiteSpinOne) {
  const auto spec = decompose(build_hamiltonian(ChainSpec::two_site(TwiceSpin(2))));
  ASSERT_EQ(spec.size(), 6u);
  const double expected[] = {-1, -1, 0.5, 0.5, 0.5, 0.5};
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(spec.eigenvalues(k), expected[k], 1e-12);
}

TEST(Decompose, ReconstructionAndOrthonormality) {
  for (int ts : {1, 2, 3, 5}) {
    SCOPED_TRACE(ts);
    const auto h = build_hamiltonian(ChainSpec::ring(2, TwiceSpin(ts)));
    const auto spec = decompose(h);
    const auto& v = spec.eigenvectors;
    const auto n = v.rows();
    EXPECT_LT((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
    const Eigen::MatrixXd rebuilt = v * spec.eigenvalues.asDiagonal() * v.transpose();
    const double norm = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h.matrix.matrix).eigenvalues().cwiseAbs().maxCoeff();
    const double err = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(rebuilt - h.matrix.matrix).eigenvalues().cwiseAbs().maxCoeff();
    EXPECT_LT(err / norm, 1e-9);
    EXPECT_NEAR(spec.eigenvalues.sum(), h.matrix.matrix.trace(), 1e-9);
    EXPECT_TRUE(std::is_sorted(spec.eigenvalues.data(), spec.eigenvalues.data() + spec.eigenvalues.size()));
  }
}

TEST(Decompose, FourSiteSpinHalfGround) {
  const auto spec = decompose(build_hamiltonian(ChainSpec::ring(2, TwiceSpin(1))));
  EXPECT_NEAR(spec.eigenvalues(0), -2.0, 1e-12);
}

// Sector blocking versus the single dense solve, including open chains.
TEST(Decompose, BlockedMatchesDense) {
  for (int ts : {1, 2, 3, 4}) {
    for (const auto& chain : {ChainSpec::ring(2, TwiceSpin(ts)), ChainSpec{2, TwiceSpin(ts), 1.0, Boundary::open}}) {
      const auto h = build_hamiltonian(chain);
      const auto blocked = decompose(h);
      const auto dense = decompose_dense(h.matrix);
      EXPECT_LT((blocked.eigenvalues - dense.eigenvalues).cwiseAbs().maxCoeff(), 1e-9);
      for (double beta : {0.0, 0.3, 2.0}) {
        auto wb = ensemble_at_beta(blocked, beta).weights;
        auto wd = ensemble_at_beta(dense, beta).weights;
        std::sort(wb.data(), wb.data() + wb.size());
        std::sort(wd.data(), wd.data() + wd.size());
        EXPECT_LT((wb - wd).cwiseAbs().maxCoeff(), 1e-9);
      }
    }
  }
}

TEST(Ensemble, InfiniteTemperature) {
  const auto spec = decompose(build_hamiltonian(ChainSpec::ring(2, TwiceSpin(2))));
  for (double t : {std::numeric_limits<double>::infinity()}) {
    const auto ens = ensemble(spec, t);
    EXPECT_EQ(ens.beta, 0.0);
    EXPECT_LT((ens.weights.array() - 1.0 / 36.0).abs().maxCoeff(), 1e-15);
    EXPECT_NEAR(std::exp(ens.log_z), 36.0, 1e-10);
  }
  EXPECT_THROW(ensemble(spec, 0.0), ConfigError);
  EXPECT_THROW(ensemble(spec, -1.0), ConfigError);
}

TEST(Ensemble, TwoSitePartitionFunctionAgainstBruteForce) {
  for (int ts = 1; ts <= 10; ++ts) {
    const double s = 0.5 * ts;
    const auto spec = decompose(build_hamiltonian(ChainSpec::two_site(TwiceSpin(ts))));
    for (double beta : {0.0, 0.1, 1.0, 4.0, 12.0}) {
      const double z = std::exp(ensemble_at_beta(spec, beta).log_z);
      const double closed = 2 * s * std::exp((s + 1) * beta / 2) + 2 * (s + 1) * std::exp(-s * beta / 2);
      EXPECT_NEAR(z / closed, 1.0, 1e-10);
      EXPECT_NEAR(z / brute_force_z(ts, beta), 1.0, 1e-10);
    }
  }
}

TEST(Ensemble, LargeBetaStaysFinite) {
  const auto spec = decompose(build_hamiltonian(ChainSpec::two_site(TwiceSpin(1))));
  const auto ens = ensemble_at_beta(spec, 200.0);
  EXPECT_NEAR(ens.weights(0), 1.0, 1e-12);
  EXPECT_LT(ens.weights.tail(3).maxCoeff(), 1e-12);
  const auto big = ensemble_at_beta(spec, 1e3);
  EXPECT_TRUE(std::isfinite(big.log_z));
  EXPECT_NEAR(big.log_z, 1e3 * 0.75, 1e-9);
  EXPECT_NEAR(big.weights.sum(), 1.0, 1e-12);
  EXPECT_GE(big.weights.minCoeff(), 0.0);
}

TEST(Ensemble, GroundStateDegeneracy) {
  for (int ts = 1; ts <= 6; ++ts) {
    const auto spec = decompose(build_hamiltonian(ChainSpec::two_site(TwiceSpin(ts))));
    const auto ens = ground_state_ensemble(spec);
    EXPECT_EQ((ens.weights.array() > 0.0).count(), ts);
    EXPECT_NEAR(ens.weights.sum(), 1.0, 1e-15);
    EXPECT_NEAR(ens.weights.maxCoeff(), 1.0 / ts, 1e-15);
  }
}

TEST(ThermalExpectation, TwoSiteCorrelator) {
  for (int ts = 1; ts <= 6; ++ts) {
    const double s = 0.5 * ts;
    const auto chain = ChainSpec::two_site(TwiceSpin(ts));
    const auto h = build_hamiltonian(chain);
    const auto spec = decompose(h);
    const auto bond = dot_coupling(0, 1, chain.dims());
    EXPECT_NEAR(thermal_expectation(spec, ensemble_at_beta(spec, 0.0), bond), 0.0, 1e-12);
    for (double beta = 0.25; beta <= 20.0; beta *= 2) {
      const double c = thermal_expectation(spec, ensemble_at_beta(spec, beta), bond);
      const double z = 2 * s * std::exp((s + 1) * beta / 2) + 2 * (s + 1) * std::exp(-s * beta / 2);
      const double closed = -s * (s + 1) / z * (std::exp((s + 1) * beta / 2) - std::exp(-s * beta / 2));
      EXPECT_NEAR(c, closed, 1e-10);
      EXPECT_NEAR(c, brute_force_energy(ts, beta), 1e-10);
    }
    EXPECT_NEAR(thermal_expectation(spec, ground_state_ensemble(spec), bond), -(s + 1) / 2, 1e-12);
  }
}

// <H> = -d log Z / d beta by centered differences, and log Z convex in beta.
TEST(ThermalExpectation, EnergyDerivativeConsistency) {
  const double h = 1e-4;
  for (int ts : {1, 2, 5}) {
    const auto chain = ChainSpec::two_site(TwiceSpin(ts));
    const auto spec = decompose(build_hamiltonian(chain));
    const auto bond = dot_coupling(0, 1, chain.dims());
    for (double beta : {0.2, 1.0, 3.0, 7.0}) {
      const double fd = -(ensemble_at_beta(spec, beta + h).log_z - ensemble_at_beta(spec, beta - h).log_z) / (2 * h);
      EXPECT_NEAR(thermal_expectation(spec, ensemble_at_beta(spec, beta), bond), fd, 1e-7);
      const double second = ensemble_at_beta(spec, beta + h).log_z - 2 * ensemble_at_beta(spec, beta).log_z +
                            ensemble_at_beta(spec, beta - h).log_z;
      EXPECT_GE(second, -1e-9);
    }
  }
}

TEST(ThermalExpectation, ComplexOperatorAndMismatch) {
  const auto chain = ChainSpec::two_site(TwiceSpin(2));
  const auto spec = decompose(build_hamiltonian(chain));
  const auto ens = ensemble(spec, 0.7);
  const auto sy = spin_matrices(TwiceSpin(2)).sy;
  const auto sy_total = embed(sy, 1, chain.dims());
  EXPECT_NEAR(thermal_expectation(spec, ens, sy_total), 0.0, 1e-12);
  EXPECT_THROW(thermal_expectation(spec, ens, identity({2, 2})), ConfigError);
}

TEST(ThermalDensityMatrix, Properties) {
  const auto h = build_hamiltonian(ChainSpec::ring(2, TwiceSpin(2)));
  const auto spec = decompose(h);
  const auto n = h.matrix.matrix.rows();
  const auto mixed = thermal_density_matrix(spec, ensemble_at_beta(spec, 0.0));
  EXPECT_LT((mixed.matrix - Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n)).cwiseAbs().maxCoeff(), 1e-14);
  for (double t : {0.05, 0.5, 2.0, 10.0}) {
    const auto rho = thermal_density_matrix(spec, ensemble(spec, t));
    EXPECT_NEAR(rho.matrix.trace(), 1.0, 1e-12);
    EXPECT_NO_THROW(rho.validate());
    EXPECT_LT((rho.matrix * h.matrix.matrix - h.matrix.matrix * rho.matrix).cwiseAbs().maxCoeff(), 1e-10);
  }
}

// The level-grouped pair states equal the naive route through the full density matrix.
TEST(ReducedPairSpectrum, MatchesNaivePartialTrace) {
  for (int ts : {1, 2, 3}) {
    const auto h = build_hamiltonian(ChainSpec::ring(2, TwiceSpin(ts)));
    const auto spec = decompose(h);
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 1}, {3, 0}}) {
      const ReducedPairSpectrum pairs(spec, a, b);
      for (double t : {0.1, 0.7, 3.0}) {
        const auto full = thermal_density_matrix(spec, ensemble(spec, t));
        const auto naive = partial_trace(full, a, b);
        const auto fast = pairs.pair_state(1.0 / t);
        EXPECT_LT((naive.base.matrix - fast.base.matrix).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(pairs.log_partition(1.0 / t), ensemble(spec, t).log_z, 1e-12);
        EXPECT_NEAR(pairs.correlator(1.0 / t), su2_correlator(fast), 1e-12);
      }
      const auto ground = partial_trace(thermal_density_matrix(spec, ground_state_ensemble(spec)), a, b);
      EXPECT_LT((ground.base.matrix - pairs.ground_pair_state().base.matrix).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

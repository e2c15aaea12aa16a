#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ferri/dimension_cap.hpp"
#include "ferri/errors.hpp"
#include "ferri/spin_algebra.hpp"
#include "oracle.hpp"

using namespace ferri;

namespace {

Eigen::VectorXd sorted_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

TEST(TwiceSpin, RejectsSpinZero) {
  EXPECT_THROW(TwiceSpin(0), ConfigError);
  EXPECT_THROW(TwiceSpin(-3), ConfigError);
  EXPECT_EQ(TwiceSpin(3).dim(), 4u);
  EXPECT_DOUBLE_EQ(TwiceSpin(3).value(), 1.5);
}

TEST(SpinMatrices, SpinHalf) {
  const auto s = spin_matrices(TwiceSpin::half());
  EXPECT_DOUBLE_EQ(s.sz.matrix(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(s.sz.matrix(1, 1), -0.5);
  EXPECT_DOUBLE_EQ(s.s_plus.matrix(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(s.s_plus.matrix.cwiseAbs().sum(), 1.0);
}

TEST(SpinMatrices, SpinOne) {
  const auto s = spin_matrices(TwiceSpin(2));
  EXPECT_DOUBLE_EQ(s.sz.matrix(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(s.sz.matrix(1, 1), 0.0);
  EXPECT_DOUBLE_EQ(s.sz.matrix(2, 2), -1.0);
  EXPECT_DOUBLE_EQ(s.s_plus.matrix(0, 1), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(s.s_plus.matrix(1, 2), std::sqrt(2.0));
  EXPECT_EQ((s.s_plus.matrix.array() != 0.0).count(), 2);
}

// Commutators, Casimir, and agreement with the Cartesian reference for 2j = 1..10.
TEST(SpinMatrices, AlgebraHoldsForAllTestedSpins) {
  for (int tj = 1; tj <= 10; ++tj) {
    SCOPED_TRACE(tj);
    const auto s = spin_matrices(TwiceSpin(tj));
    const Eigen::MatrixXcd x = s.sx.matrix.cast<std::complex<double>>();
    const Eigen::MatrixXcd& y = s.sy.matrix;
    const Eigen::MatrixXcd z = s.sz.matrix.cast<std::complex<double>>();
    const std::complex<double> i(0.0, 1.0);
    EXPECT_LT((x * y - y * x - i * z).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((y * z - z * y - i * x).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((z * x - x * z - i * y).cwiseAbs().maxCoeff(), 1e-12);

    const auto d = static_cast<Eigen::Index>(tj + 1);
    const Eigen::MatrixXcd casimir = x * x + y * y + z * z;
    EXPECT_LT((casimir - TwiceSpin(tj).casimir() * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);

    EXPECT_TRUE(is_hermitian(s.sx));
    EXPECT_TRUE(is_hermitian(s.sy));
    EXPECT_TRUE((s.s_plus.matrix.array() >= 0.0).all());
    EXPECT_EQ(s.s_minus.matrix, s.s_plus.matrix.transpose());

    const auto ref = oracle::cartesian(tj);
    EXPECT_LT((x - ref.x).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((y - ref.y).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(TensorProduct, IdentityAndTrace) {
  const auto i2 = identity({2});
  const auto i3 = identity({3});
  const auto i6 = tensor_product(i2, i3);
  EXPECT_EQ(i6.dims, (Dims{2, 3}));
  EXPECT_EQ(i6.matrix, Eigen::MatrixXd::Identity(6, 6));

  const auto a = spin_matrices(TwiceSpin(1));
  const auto b = spin_matrices(TwiceSpin(2));
  RealOperator sa{{2}, a.sz.matrix + 0.3 * Eigen::MatrixXd::Identity(2, 2)};
  RealOperator sb{{3}, b.sx.matrix + 1.7 * Eigen::MatrixXd::Identity(3, 3)};
  EXPECT_NEAR(tensor_product(sa, sb).matrix.trace(), sa.matrix.trace() * sb.matrix.trace(), 1e-12);

  const Eigen::MatrixXd total = tensor_product(a.sz, identity({3})).matrix + tensor_product(identity({2}), b.sz).matrix;
  EXPECT_NEAR(total.trace(), 0.0, 1e-15);
}

TEST(TensorProduct, RespectsDimensionCap) {
  ScopedDimensionCap cap(10);
  EXPECT_THROW(tensor_product(identity({3}), identity({4})), DimensionCapExceeded);
  EXPECT_NO_THROW(tensor_product(identity({3}), identity({3})));
}

TEST(Embed, MatchesKroneckerAndCommutesOnDisjointSites) {
  const auto half = spin_matrices(TwiceSpin(1));
  const auto one = spin_matrices(TwiceSpin(2));
  const Dims dims{2, 3};
  EXPECT_EQ(embed(half.sz, 0, dims).matrix, tensor_product(half.sz, identity({3})).matrix);
  EXPECT_EQ(embed(identity({3}), 1, dims).matrix, Eigen::MatrixXd::Identity(6, 6));

  const auto a = embed(half.sx, 0, dims).matrix;
  const auto b = embed(one.s_plus, 1, dims).matrix;
  EXPECT_LT((a * b - b * a).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Embed, Errors) {
  const auto half = spin_matrices(TwiceSpin(1));
  EXPECT_THROW(embed(half.sz, 2, Dims{2, 3}), std::out_of_range);
  EXPECT_THROW(embed(half.sz, 1, Dims{2, 3}), ConfigError);
}

// Spectrum of embed(op) is the spectrum of op repeated (product of other dims) times.
TEST(Embed, PreservesHermiticityAndSpectrum) {
  const auto s = spin_matrices(TwiceSpin(3));
  const Dims dims{2, 4, 3};
  const auto e = embed(s.sx, 1, dims);
  EXPECT_TRUE(is_hermitian(e));
  const auto local = sorted_eigenvalues(s.sx.matrix);
  std::vector<double> expected;
  for (Eigen::Index k = 0; k < local.size(); ++k)
    for (int r = 0; r < 6; ++r) expected.push_back(local(k));
  std::sort(expected.begin(), expected.end());
  const auto got = sorted_eigenvalues(e.matrix);
  ASSERT_EQ(static_cast<std::size_t>(got.size()), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(got(static_cast<Eigen::Index>(k)), expected[k], 1e-12);
}

TEST(DotCoupling, TwoSpinHalves) {
  const auto h = dot_coupling(0, 1, {2, 2});
  const auto ev = sorted_eigenvalues(h.matrix);
  EXPECT_NEAR(ev(0), -0.75, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev(k), 0.25, 1e-14);
  EXPECT_NEAR(h.matrix.trace(), 0.0, 1e-15);
}

TEST(DotCoupling, MixedPairLevels) {
  for (int ts = 1; ts <= 10; ++ts) {
    SCOPED_TRACE(ts);
    const double s = 0.5 * ts;
    const auto ev = sorted_eigenvalues(dot_coupling(0, 1, {2, static_cast<std::size_t>(ts + 1)}).matrix);
    for (int k = 0; k < ts; ++k) EXPECT_NEAR(ev(k), -(s + 1) / 2, 1e-12);
    for (int k = ts; k < ev.size(); ++k) EXPECT_NEAR(ev(k), s / 2, 1e-12);
  }
}

// Ladder assembly against the complex Cartesian product route.
TEST(DotCoupling, MatchesCartesianProducts) {
  const std::vector<int> tj{1, 3, 1, 2};
  const Dims dims{2, 4, 2, 3};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      if (a == b) continue;
      const auto h = dot_coupling(a, b, dims);
      const Eigen::MatrixXcd ref = oracle::bond(a, b, tj);
      EXPECT_LT(ref.imag().cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_LT((h.matrix - ref.real()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_TRUE(is_hermitian(h, 1e-14));
      EXPECT_NEAR(h.matrix.trace(), 0.0, 1e-12);
    }
  EXPECT_THROW(dot_coupling(1, 1, dims), ConfigError);
  EXPECT_THROW(dot_coupling(0, 4, dims), std::out_of_range);
}

TEST(TotalSpin, SquaredMatchesCartesianSum) {
  const std::vector<int> tj{1, 2, 1};
  const Dims dims{2, 3, 2};
  Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(12, 12), sy = sx, sz = sx;
  for (std::size_t k = 0; k < tj.size(); ++k) {
    const auto c = oracle::cartesian(tj[k]);
    sx += oracle::on_site(c.x, k, tj);
    sy += oracle::on_site(c.y, k, tj);
    sz += oracle::on_site(c.z, k, tj);
  }
  const Eigen::MatrixXcd s2 = sx * sx + sy * sy + sz * sz;
  EXPECT_LT((total_spin_squared(dims).matrix - s2.real()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((total_spin_z(dims).matrix - sz.real()).cwiseAbs().maxCoeff(), 1e-12);
  const Eigen::MatrixXcd sp = sx + std::complex<double>(0, 1) * sy;
  EXPECT_LT((total_spin_plus(dims).matrix - sp.real()).cwiseAbs().maxCoeff(), 1e-12);
}

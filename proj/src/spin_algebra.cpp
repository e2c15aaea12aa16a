#include "ferri/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ferri/dimension_cap.hpp"
#include "ferri/errors.hpp"

namespace ferri {

TwiceSpin::TwiceSpin(int twice_j) : twice_(twice_j) {
  if (twice_j < 1) throw ConfigError("spin must be at least 1/2 (got 2j=" + std::to_string(twice_j) + ")");
}

TwiceSpin spin_of_dimension(std::size_t d) {
  if (d < 2) throw ConfigError("local dimension must be at least 2");
  return TwiceSpin(static_cast<int>(d) - 1);
}

RealOperator identity(const Dims& dims) {
  const auto side = product_dimension(dims);
  check_dimension(side, "identity");
  const auto n = static_cast<Eigen::Index>(side);
  return {dims, Eigen::MatrixXd::Identity(n, n)};
}

template <typename Scalar>
void check_shape(const Operator<Scalar>& op) {
  if (op.matrix.rows() != op.matrix.cols()) throw ConfigError("operator matrix is not square");
  if (product_dimension(op.dims) != op.side())
    throw ConfigError("operator side " + std::to_string(op.side()) +
                      " does not match the product of its factor dimensions");
}

template <typename Scalar>
bool is_hermitian(const Operator<Scalar>& op, double tol) {
  if (op.matrix.rows() != op.matrix.cols()) return false;
  const auto n = op.matrix.rows();
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a; b < n; ++b) {
      using std::conj;
      if (std::abs(op.matrix(a, b) - conj(op.matrix(b, a))) > tol) return false;
    }
  return true;
}

std::vector<int> twice_m_values(TwiceSpin j) {
  std::vector<int> out(j.dim());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = j.twice() - 2 * static_cast<int>(k);
  return out;
}

namespace {

// <m+1|S+|m> for the local state with index k+1 (m) raised to index k (m+1).
// j(j+1) - m(m+1) = (tj(tj+2) - tm(tm+2)) / 4.
double raising_element(int twice_j, int twice_m) {
  const int num = twice_j * (twice_j + 2) - twice_m * (twice_m + 2);
  return 0.5 * std::sqrt(static_cast<double>(num));
}

}  // namespace

SpinTriple spin_matrices(TwiceSpin j) {
  const auto d = static_cast<Eigen::Index>(j.dim());
  const auto ms = twice_m_values(j);
  const Dims dims{j.dim()};

  Eigen::MatrixXd sz = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd sp = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    sz(k, k) = 0.5 * ms[static_cast<std::size_t>(k)];
    if (k > 0) sp(k - 1, k) = raising_element(j.twice(), ms[static_cast<std::size_t>(k)]);
  }
  Eigen::MatrixXd sm = sp.transpose();
  Eigen::MatrixXd sx = 0.5 * (sp + sm);
  const std::complex<double> minus_half_i(0.0, -0.5);
  Eigen::MatrixXcd sy = minus_half_i * (sp - sm).cast<std::complex<double>>();

  return SpinTriple{j, {dims, sx}, {dims, sy}, {dims, sz}, {dims, sp}, {dims, sm}};
}

template <typename Scalar>
Operator<Scalar> tensor_product(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  check_shape(a);
  check_shape(b);
  Dims dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  const auto side = product_dimension(dims);
  check_dimension(side, "tensor_product");

  const auto na = a.matrix.rows();
  const auto nb = b.matrix.rows();
  DenseMatrix<Scalar> out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index k = 0; k < na; ++k) out.block(i * nb, k * nb, nb, nb) = a.matrix(i, k) * b.matrix;
  return {std::move(dims), std::move(out)};
}

template <typename Scalar>
Operator<Scalar> embed(const Operator<Scalar>& op, std::size_t site, const Dims& dims) {
  check_shape(op);
  if (site >= dims.size())
    throw std::out_of_range("embed: site " + std::to_string(site) + " out of range for " +
                            std::to_string(dims.size()) + " factors");
  if (op.dims.size() != 1 || op.dims[0] != dims[site])
    throw ConfigError("embed: operator dimension does not match factor " + std::to_string(site));

  const auto side = product_dimension(dims);
  check_dimension(side, "embed");
  std::size_t right = 1;
  for (std::size_t k = site + 1; k < dims.size(); ++k) right *= dims[k];
  const std::size_t local = dims[site];
  const std::size_t left = side / (local * right);

  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(side),
                                                      static_cast<Eigen::Index>(side));
  for (std::size_t l = 0; l < left; ++l)
    for (std::size_t p = 0; p < local; ++p)
      for (std::size_t q = 0; q < local; ++q) {
        const Scalar v = op.matrix(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
        if (v == Scalar(0)) continue;
        const std::size_t row0 = (l * local + p) * right;
        const std::size_t col0 = (l * local + q) * right;
        for (std::size_t r = 0; r < right; ++r)
          out(static_cast<Eigen::Index>(row0 + r), static_cast<Eigen::Index>(col0 + r)) = v;
      }
  return {dims, std::move(out)};
}

namespace {

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

void check_site(std::size_t site, const Dims& dims) {
  if (site >= dims.size())
    throw std::out_of_range("site " + std::to_string(site) + " out of range for " +
                            std::to_string(dims.size()) + " factors");
}

// Adds coeff * s_a . s_b into `out`, which has side product(dims).
void accumulate_dot(Eigen::MatrixXd& out, double coeff, std::size_t a, std::size_t b, const Dims& dims,
                    const std::vector<std::size_t>& strides) {
  const auto tja = static_cast<int>(dims[a]) - 1;
  const auto tjb = static_cast<int>(dims[b]) - 1;
  const auto n = static_cast<std::size_t>(out.rows());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ka = static_cast<int>((i / strides[a]) % dims[a]);
    const auto kb = static_cast<int>((i / strides[b]) % dims[b]);
    const int tma = tja - 2 * ka;
    const int tmb = tjb - 2 * kb;
    const auto ii = static_cast<Eigen::Index>(i);
    out(ii, ii) += coeff * 0.25 * tma * tmb;
    // S+_a S-_b: raise a (index ka-1), lower b (index kb+1).
    if (ka > 0 && kb + 1 < static_cast<int>(dims[b])) {
      const auto j = static_cast<Eigen::Index>(i - strides[a] + strides[b]);
      out(j, ii) += coeff * 0.5 * raising_element(tja, tma) * raising_element(tjb, tmb - 2);
    }
    // S-_a S+_b.
    if (kb > 0 && ka + 1 < static_cast<int>(dims[a])) {
      const auto j = static_cast<Eigen::Index>(i + strides[a] - strides[b]);
      out(j, ii) += coeff * 0.5 * raising_element(tja, tma - 2) * raising_element(tjb, tmb);
    }
  }
}

}  // namespace

RealOperator dot_coupling(std::size_t site_a, std::size_t site_b, const Dims& dims) {
  check_site(site_a, dims);
  check_site(site_b, dims);
  if (site_a == site_b) throw ConfigError("dot_coupling: sites must differ");
  const auto side = product_dimension(dims);
  check_dimension(side, "dot_coupling");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
  accumulate_dot(out, 1.0, site_a, site_b, dims, strides_of(dims));
  return {dims, std::move(out)};
}

RealOperator total_spin_z(const Dims& dims) {
  const auto side = product_dimension(dims);
  check_dimension(side, "total_spin_z");
  const auto strides = strides_of(dims);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
  for (std::size_t i = 0; i < side; ++i) {
    int twice_m = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
      twice_m += static_cast<int>(dims[k]) - 1 - 2 * static_cast<int>((i / strides[k]) % dims[k]);
    out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 0.5 * twice_m;
  }
  return {dims, std::move(out)};
}

RealOperator total_spin_plus(const Dims& dims) {
  const auto side = product_dimension(dims);
  check_dimension(side, "total_spin_plus");
  const auto strides = strides_of(dims);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const auto idx = static_cast<int>((i / strides[k]) % dims[k]);
      if (idx == 0) continue;
      const int tj = static_cast<int>(dims[k]) - 1;
      out(static_cast<Eigen::Index>(i - strides[k]), static_cast<Eigen::Index>(i)) +=
          raising_element(tj, tj - 2 * idx);
    }
  return {dims, std::move(out)};
}

RealOperator total_spin_squared(const Dims& dims) {
  const auto side = product_dimension(dims);
  check_dimension(side, "total_spin_squared");
  const auto n = static_cast<Eigen::Index>(side);
  double local = 0.0;
  for (auto d : dims) local += spin_of_dimension(d).casimir();
  Eigen::MatrixXd out = local * Eigen::MatrixXd::Identity(n, n);
  const auto strides = strides_of(dims);
  for (std::size_t a = 0; a < dims.size(); ++a)
    for (std::size_t b = a + 1; b < dims.size(); ++b) accumulate_dot(out, 2.0, a, b, dims, strides);
  return {dims, std::move(out)};
}

template void check_shape(const Operator<double>&);
template void check_shape(const Operator<std::complex<double>>&);
template bool is_hermitian(const Operator<double>&, double);
template bool is_hermitian(const Operator<std::complex<double>>&, double);
template Operator<double> tensor_product(const Operator<double>&, const Operator<double>&);
template Operator<std::complex<double>> tensor_product(const Operator<std::complex<double>>&,
                                                       const Operator<std::complex<double>>&);
template Operator<double> embed(const Operator<double>&, std::size_t, const Dims&);
template Operator<std::complex<double>> embed(const Operator<std::complex<double>>&, std::size_t, const Dims&);

}  // namespace ferri

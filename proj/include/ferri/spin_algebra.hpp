#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace ferri {

/// Spin quantum number carried as the integer 2j, so half-integers stay exact.
class TwiceSpin {
 public:
  /// Throws ConfigError for twice_j < 1 (spin 0 is not a physical site here).
  explicit TwiceSpin(int twice_j);

  static TwiceSpin half() { return TwiceSpin(1); }

  int twice() const noexcept { return twice_; }
  /// Local Hilbert-space dimension 2j + 1.
  std::size_t dim() const noexcept { return static_cast<std::size_t>(twice_) + 1; }
  /// j as a real number, for use inside formulas only.
  double value() const noexcept { return 0.5 * twice_; }
  /// j(j+1), exact for every representable j.
  double casimir() const noexcept { return 0.25 * twice_ * (twice_ + 2); }

  friend bool operator==(TwiceSpin, TwiceSpin) = default;
  friend auto operator<=>(TwiceSpin, TwiceSpin) = default;

 private:
  int twice_;
};

using Dims = std::vector<std::size_t>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense operator on a tensor product of local spaces. Basis order is row-major
/// over the factors: the last factor varies fastest, and within each factor the
/// local states run m = j, j-1, ..., -j.
template <typename Scalar>
struct Operator {
  Dims dims;
  DenseMatrix<Scalar> matrix;

  std::size_t side() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
};

/// Real storage. Every operator this library diagonalizes is real symmetric in
/// the S_z / ladder basis.
using RealOperator = Operator<double>;
using ComplexOperator = Operator<std::complex<double>>;

RealOperator identity(const Dims& dims);

/// Checks the side/dims consistency and throws ConfigError on mismatch.
template <typename Scalar>
void check_shape(const Operator<Scalar>& op);

template <typename Scalar>
bool is_hermitian(const Operator<Scalar>& op, double tol = 1e-12);

struct SpinTriple {
  TwiceSpin spin;
  RealOperator sx;
  ComplexOperator sy;  // purely imaginary; used by the algebra self-tests only
  RealOperator sz;
  RealOperator s_plus;
  RealOperator s_minus;
};

/// Irreducible (2j+1)-dimensional representation in the S_z eigenbasis.
SpinTriple spin_matrices(TwiceSpin j);

/// Diagonal of S_z as 2m values for the local basis m = j, ..., -j.
std::vector<int> twice_m_values(TwiceSpin j);

/// Kronecker product a (x) b. Result dims are dims(a) followed by dims(b).
template <typename Scalar>
Operator<Scalar> tensor_product(const Operator<Scalar>& a, const Operator<Scalar>& b);

/// Places a single-factor operator on factor `site`, identity elsewhere.
template <typename Scalar>
Operator<Scalar> embed(const Operator<Scalar>& op, std::size_t site, const Dims& dims);

/// s_a . s_b for two sites of a product space, assembled directly in the
/// product basis from (S+S- + S-S+)/2 + SzSz. Each factor d is spin (d-1)/2.
RealOperator dot_coupling(std::size_t site_a, std::size_t site_b, const Dims& dims);

/// Sum over sites of S_z.
RealOperator total_spin_z(const Dims& dims);
/// Sum over sites of S_+.
RealOperator total_spin_plus(const Dims& dims);
/// (sum S)^2 = sum_k j_k(j_k+1) + 2 sum_{a<b} s_a . s_b.
RealOperator total_spin_squared(const Dims& dims);

/// Spin of a local factor of dimension d, i.e. TwiceSpin(d - 1).
TwiceSpin spin_of_dimension(std::size_t d);

}  // namespace ferri

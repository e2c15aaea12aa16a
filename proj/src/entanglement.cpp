#include "ferri/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ferri/dimension_cap.hpp"
#include "ferri/errors.hpp"

namespace ferri {

namespace {

constexpr double kSu2Gate = 1e-6;

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

// Offsets into the full basis of every configuration of `sites`, enumerated
// row-major in the listed order.
std::vector<std::size_t> offsets_over(const std::vector<std::size_t>& sites, const Dims& dims,
                                      const std::vector<std::size_t>& strides) {
  std::vector<std::size_t> offsets{0};
  for (auto site : sites) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[site]);
    for (auto base : offsets)
      for (std::size_t k = 0; k < dims[site]; ++k) next.push_back(base + k * strides[site]);
    offsets = std::move(next);
  }
  return offsets;
}

Dims pair_dims(TwiceSpin s) { return {2, s.dim()}; }

}  // namespace

void DensityMatrix::validate(double tol, double tol_psd) const {
  if (matrix.rows() != matrix.cols() || product_dimension(dims) != static_cast<std::size_t>(matrix.rows()))
    throw InvariantViolation("density matrix shape does not match its dims");
  const double trace = matrix.trace();
  if (std::abs(trace - 1.0) > tol) throw InvariantViolation("density matrix trace " + std::to_string(trace));
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > tol)
    throw InvariantViolation("density matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < -tol_psd)
    throw InvariantViolation("density matrix has eigenvalue " + std::to_string(solver.eigenvalues()(0)));
}

PairState make_pair_state(Eigen::MatrixXd matrix, TwiceSpin big_spin) {
  const auto d = static_cast<Eigen::Index>(2 * big_spin.dim());
  if (matrix.rows() != d || matrix.cols() != d) throw ConfigError("pair state must be 2(2s+1) square");
  return {{pair_dims(big_spin), std::move(matrix)}, big_spin};
}

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
  const auto& dims = rho.dims;
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw std::out_of_range("reduce: site " + std::to_string(k) + " out of range");
    if (kept[k]) throw ConfigError("reduce: duplicate kept site");
    kept[k] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (!kept[k]) traced.push_back(k);

  const auto strides = strides_of(dims);
  const auto keep_off = offsets_over(keep, dims, strides);
  const auto env_off = offsets_over(traced, dims, strides);

  Dims out_dims;
  for (auto k : keep) out_dims.push_back(dims[k]);
  const auto n = static_cast<Eigen::Index>(keep_off.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (auto e : env_off)
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        out(p, q) += rho.matrix(static_cast<Eigen::Index>(e + keep_off[static_cast<std::size_t>(p)]),
                                static_cast<Eigen::Index>(e + keep_off[static_cast<std::size_t>(q)]));
  return {std::move(out_dims), std::move(out)};
}

PairState partial_trace(const DensityMatrix& rho, std::size_t site_a, std::size_t site_b) {
  if (site_a >= rho.dims.size() || site_b >= rho.dims.size())
    throw std::out_of_range("partial_trace: kept site out of range");
  if (site_a == site_b) throw ConfigError("partial_trace: kept sites must differ");
  std::vector<std::size_t> keep;
  if (rho.dims[site_a] == 2)
    keep = {site_a, site_b};
  else if (rho.dims[site_b] == 2)
    keep = {site_b, site_a};
  else
    throw ConfigError("partial_trace: kept pair has no spin-1/2 factor; the (1/2, s) formulas do not apply");
  auto reduced = reduce(rho, keep);
  const auto s = spin_of_dimension(reduced.dims[1]);
  return {std::move(reduced), s};
}

Eigen::MatrixXd partial_transpose(const PairState& rho) {
  const auto d = static_cast<Eigen::Index>(rho.big_spin.dim());
  const auto& m = rho.base.matrix;
  Eigen::MatrixXd out(2 * d, 2 * d);
  for (Eigen::Index x = 0; x < 2; ++x)
    for (Eigen::Index y = 0; y < 2; ++y)
      out.block(x * d, y * d, d, d) = m.block(x * d, y * d, d, d).transpose();
  return out;
}

Eigen::MatrixXd partial_transpose_first(const PairState& rho) {
  const auto d = static_cast<Eigen::Index>(rho.big_spin.dim());
  const auto& m = rho.base.matrix;
  Eigen::MatrixXd out(2 * d, 2 * d);
  for (Eigen::Index x = 0; x < 2; ++x)
    for (Eigen::Index y = 0; y < 2; ++y) out.block(x * d, y * d, d, d) = m.block(y * d, x * d, d, d);
  return out;
}

double negative_part(const Eigen::VectorXd& eigenvalues) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues(i) < 0.0) sum -= eigenvalues(i);
  return sum;
}

NegativityReport negativity_numeric(const PairState& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(partial_transpose(rho), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvariantViolation("partial transpose eigensolve failed");
  NegativityReport report;
  report.spectrum = solver.eigenvalues();
  report.negativity = negative_part(report.spectrum);
  report.trace_norm = report.spectrum.cwiseAbs().sum();
  if (std::abs(report.trace_norm - 1.0 - 2.0 * report.negativity) > 1e-10)
    throw InvariantViolation("trace norm " + std::to_string(report.trace_norm) +
                             " inconsistent with negativity (input not unit trace?)");
  return report;
}

double su2_correlator(const PairState& rho) {
  const auto bond = dot_coupling(0, 1, pair_dims(rho.big_spin));
  return rho.base.matrix.cwiseProduct(bond.matrix).sum();
}

double negativity_su2(double correlator, TwiceSpin s) {
  const double sv = s.value();
  const double lo = -0.5 * (sv + 1.0);
  const double hi = 0.5 * sv;
  if (!(correlator >= lo - 1e-9 && correlator <= hi + 1e-9))
    throw ConfigError("correlator " + std::to_string(correlator) + " outside physical range [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return std::max(0.0, -(sv + 2.0 * correlator) / (2.0 * sv + 1.0));
}

Eigen::MatrixXd low_spin_projector(TwiceSpin s) {
  const auto s2 = total_spin_squared(pair_dims(s));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s2.matrix);
  const double sv = s.value();
  // j(j+1) at j = s - 1/2 and j = s + 1/2.
  const double low = (sv - 0.5) * (sv + 0.5);
  const double high = (sv + 0.5) * (sv + 1.5);
  const double cut = 0.5 * (low + high);

  const auto n = s2.matrix.rows();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  int rank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (solver.eigenvalues()(k) >= cut) continue;
    const auto v = solver.eigenvectors().col(k);
    p.noalias() += v * v.transpose();
    ++rank;
  }
  if (rank != s.twice()) throw InvariantViolation("low-spin projector has rank " + std::to_string(rank));
  return p;
}

double projector_F(const PairState& rho) {
  const double sv = rho.big_spin.value();
  const double via_correlator = (sv - 2.0 * su2_correlator(rho)) / (2.0 * sv + 1.0);
  const double via_projector = rho.base.matrix.cwiseProduct(low_spin_projector(rho.big_spin)).sum();
  if (std::abs(via_correlator - via_projector) > 1e-9)
    throw InvariantViolation("F disagrees between correlator and projector routes");
  return via_correlator;
}

double su2_residual(const PairState& rho) {
  const auto dims = pair_dims(rho.big_spin);
  const auto& m = rho.base.matrix;
  const auto sz = total_spin_z(dims);
  const auto sp = total_spin_plus(dims);
  const double rz = (m * sz.matrix - sz.matrix * m).cwiseAbs().maxCoeff();
  const double rp = (m * sp.matrix - sp.matrix * m).cwiseAbs().maxCoeff();
  return std::max(rz, rp);
}

Eigen::MatrixXd partial_time_reversal(const PairState& rho) {
  const double residual = su2_residual(rho);
  if (residual > kSu2Gate)
    throw ConfigError("partial_time_reversal: state is not SU(2)-invariant (residual " +
                      std::to_string(residual) + ")");
  const double s = rho.big_spin.value();
  const double f = (s - 2.0 * su2_correlator(rho)) / (2.0 * s + 1.0);
  const auto p = low_spin_projector(rho.big_spin);
  const double a = 2.0 * s * f + f - s;
  const double b = 2.0 * s * f + f + 1.0;
  const auto n = p.rows();
  return -a / (2.0 * s * (s + 1.0)) * p + b / (2.0 * (2.0 * s + 1.0) * (s + 1.0)) * Eigen::MatrixXd::Identity(n, n);
}

double negativity_time_reversal(const PairState& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(partial_time_reversal(rho), Eigen::EigenvaluesOnly);
  return negative_part(solver.eigenvalues());
}

double pair_negativity(const PairState& rho) {
  if (su2_residual(rho) <= kSu2Gate) return negativity_su2(su2_correlator(rho), rho.big_spin);
  return negativity_numeric(rho).negativity;
}

}  // namespace ferri

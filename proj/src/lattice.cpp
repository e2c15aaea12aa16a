#include "ferri/lattice.hpp"

#include <algorithm>
#include <map>

#include "ferri/dimension_cap.hpp"
#include "ferri/errors.hpp"

namespace ferri {

std::string_view to_string(Boundary b) noexcept {
  switch (b) {
    case Boundary::ring: return "ring";
    case Boundary::open: return "open";
    case Boundary::single_bond: return "single-bond";
  }
  return "?";
}

Boundary parse_boundary(std::string_view text) {
  if (text == "ring") return Boundary::ring;
  if (text == "open") return Boundary::open;
  if (text == "single-bond") return Boundary::single_bond;
  throw ConfigError("unknown boundary '" + std::string(text) + "'");
}

ChainSpec ChainSpec::two_site(TwiceSpin s, double coupling) {
  return ChainSpec{1, s, coupling, Boundary::single_bond};
}

ChainSpec ChainSpec::ring(int cells, TwiceSpin s, double coupling) {
  return ChainSpec{cells, s, coupling, Boundary::ring};
}

Dims ChainSpec::dims() const {
  Dims d(sites());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = (k % 2 == 0) ? 2 : big_spin.dim();
  return d;
}

std::size_t ChainSpec::dimension() const noexcept {
  const auto d = dims();
  return product_dimension(d);
}

// A ring of one cell would count the single bond twice (2J s.S); the two-site
// model is spelled single-bond instead.
void ChainSpec::validate() const {
  if (cells < 1) throw ConfigError("cells must be >= 1");
  if (boundary == Boundary::single_bond && cells != 1)
    throw ConfigError("single-bond boundary requires cells = 1");
  if (boundary == Boundary::ring && cells == 1)
    throw ConfigError("a one-cell ring double-counts its bond; use single-bond for the two-site model");
}

std::vector<Bond> bond_list(const ChainSpec& spec) {
  spec.validate();
  const auto L = spec.sites();
  std::vector<Bond> bonds;
  switch (spec.boundary) {
    case Boundary::single_bond: bonds.emplace_back(0, 1); break;
    case Boundary::open:
      for (std::size_t i = 0; i + 1 < L; ++i) bonds.emplace_back(i, i + 1);
      break;
    case Boundary::ring:
      for (std::size_t i = 0; i < L; ++i) bonds.emplace_back(i, (i + 1) % L);
      break;
  }
  return bonds;
}

LatticeHamiltonian build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const auto dims = spec.dims();
  check_dimension(product_dimension(dims), "build_hamiltonian");
  auto bonds = bond_list(spec);

  const auto n = static_cast<Eigen::Index>(product_dimension(dims));
  RealOperator h{dims, Eigen::MatrixXd::Zero(n, n)};
  for (const auto& [a, b] : bonds) h.matrix += spec.coupling * dot_coupling(a, b, dims).matrix;
  return {spec, std::move(h), std::move(bonds)};
}

RealOperator total_sz(const ChainSpec& spec) { return total_spin_z(spec.dims()); }

RealOperator total_s_squared(const ChainSpec& spec) { return total_spin_squared(spec.dims()); }

std::vector<MagnetizationSector> magnetization_sectors(const Dims& dims) {
  const auto side = product_dimension(dims);
  check_dimension(side, "magnetization_sectors");
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];

  std::map<int, std::vector<std::size_t>, std::greater<>> by_m;
  for (std::size_t i = 0; i < side; ++i) {
    int twice_m = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
      twice_m += static_cast<int>(dims[k]) - 1 - 2 * static_cast<int>((i / strides[k]) % dims[k]);
    by_m[twice_m].push_back(i);
  }
  std::vector<MagnetizationSector> out;
  out.reserve(by_m.size());
  for (auto& [m, idx] : by_m) out.push_back({m, std::move(idx)});
  return out;
}

std::vector<MagnetizationSector> magnetization_sectors(const ChainSpec& spec) {
  return magnetization_sectors(spec.dims());
}

std::vector<std::size_t> cell_translation(const ChainSpec& spec) {
  const auto dims = spec.dims();
  const auto L = dims.size();
  const auto side = product_dimension(dims);
  check_dimension(side, "cell_translation");
  std::vector<std::size_t> strides(L, 1);
  for (std::size_t k = L; k-- > 1;) strides[k - 1] = strides[k] * dims[k];

  std::vector<std::size_t> perm(side);
  for (std::size_t i = 0; i < side; ++i) {
    std::size_t target = 0;
    for (std::size_t k = 0; k < L; ++k) {
      const auto digit = (i / strides[k]) % dims[k];
      target += digit * strides[(k + 2) % L];
    }
    perm[i] = target;
  }
  return perm;
}

}  // namespace ferri

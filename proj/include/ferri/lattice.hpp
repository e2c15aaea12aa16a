#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ferri/spin_algebra.hpp"

namespace ferri {

enum class Boundary { ring, open, single_bond };

std::string_view to_string(Boundary b) noexcept;
/// Accepts "ring", "open", "single-bond". Throws ConfigError otherwise.
Boundary parse_boundary(std::string_view text);

/// Alternating spin-1/2 / spin-s chain with L = 2 * cells sites. Even site
/// indices carry spin 1/2, odd indices carry the big spin.
struct ChainSpec {
  int cells = 1;
  TwiceSpin big_spin = TwiceSpin::half();
  double coupling = 1.0;
  Boundary boundary = Boundary::single_bond;

  /// The isolated (1/2, s) bond, H = J s1.S2.
  static ChainSpec two_site(TwiceSpin s, double coupling = 1.0);
  static ChainSpec ring(int cells, TwiceSpin s, double coupling = 1.0);

  std::size_t sites() const noexcept { return 2 * static_cast<std::size_t>(cells); }
  Dims dims() const;
  std::size_t dimension() const noexcept;

  /// Throws ConfigError on an illegal combination (see lattice.cpp).
  void validate() const;
};

using Bond = std::pair<std::size_t, std::size_t>;

/// Nearest-neighbor bonds: 2N on a ring, 2N-1 open, one for single-bond.
std::vector<Bond> bond_list(const ChainSpec& spec);

struct LatticeHamiltonian {
  ChainSpec spec;
  RealOperator matrix;
  std::vector<Bond> bonds;
};

LatticeHamiltonian build_hamiltonian(const ChainSpec& spec);

RealOperator total_sz(const ChainSpec& spec);
RealOperator total_s_squared(const ChainSpec& spec);

struct MagnetizationSector {
  int twice_m;                       // 2 * total S_z
  std::vector<std::size_t> indices;  // ascending basis indices
};

/// Basis partition by total S_z, ordered from the highest 2M down.
std::vector<MagnetizationSector> magnetization_sectors(const Dims& dims);
std::vector<MagnetizationSector> magnetization_sectors(const ChainSpec& spec);

/// Basis permutation realizing translation by one unit cell (two sites):
/// state |k_0 ... k_{L-1}> maps to |k_{L-2} k_{L-1} k_0 ... k_{L-3}>.
std::vector<std::size_t> cell_translation(const ChainSpec& spec);

}  // namespace ferri

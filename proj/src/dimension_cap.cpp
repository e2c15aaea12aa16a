#include "ferri/dimension_cap.hpp"

#include <atomic>
#include <limits>
#include <string>

#include "ferri/errors.hpp"

namespace ferri {

namespace {
std::atomic<std::size_t> g_cap{kDefaultDimensionCap};
}

DimensionCapExceeded::DimensionCapExceeded(std::size_t required, std::size_t cap,
                                           const std::string& what)
    : std::runtime_error(what + ": dimension " + std::to_string(required) +
                         " exceeds cap " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

EigensolverError::EigensolverError(int twice_m, std::size_t sector_size)
    : std::runtime_error("eigensolver did not converge in sector 2M=" + std::to_string(twice_m) +
                         " (size " + std::to_string(sector_size) + ")"),
      twice_m_(twice_m) {}

std::size_t dimension_cap() noexcept { return g_cap.load(std::memory_order_relaxed); }

void set_dimension_cap(std::size_t cap) {
  if (cap == 0) throw ConfigError("dimension cap must be positive");
  g_cap.store(cap, std::memory_order_relaxed);
}

void check_dimension(std::size_t side, std::string_view what) {
  const auto cap = dimension_cap();
  if (side > cap) throw DimensionCapExceeded(side, cap, std::string(what));
}

std::size_t product_dimension(std::span<const std::size_t> dims) noexcept {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t side = 1;
  for (auto d : dims) {
    if (d != 0 && side > kMax / d) return kMax;
    side *= d;
  }
  return side;
}

ScopedDimensionCap::ScopedDimensionCap(std::size_t cap) : previous_(dimension_cap()) {
  set_dimension_cap(cap);
}

ScopedDimensionCap::~ScopedDimensionCap() { g_cap.store(previous_, std::memory_order_relaxed); }

}  // namespace ferri

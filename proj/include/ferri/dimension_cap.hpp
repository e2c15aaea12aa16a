#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace ferri {

inline constexpr std::size_t kDefaultDimensionCap = 20000;

/// Process-wide cap on the side of any dense operator we construct.
std::size_t dimension_cap() noexcept;
void set_dimension_cap(std::size_t cap);

/// Throws DimensionCapExceeded if `side` is above the current cap.
void check_dimension(std::size_t side, std::string_view what);

/// Product of local dimensions; saturates instead of overflowing so that the
/// cap check still reports a sensible (huge) requirement.
std::size_t product_dimension(std::span<const std::size_t> dims) noexcept;

/// Restores the previous cap on destruction. Intended for tests and the CLI.
class ScopedDimensionCap {
 public:
  explicit ScopedDimensionCap(std::size_t cap);
  ~ScopedDimensionCap();
  ScopedDimensionCap(const ScopedDimensionCap&) = delete;
  ScopedDimensionCap& operator=(const ScopedDimensionCap&) = delete;

 private:
  std::size_t previous_;
};

}  // namespace ferri

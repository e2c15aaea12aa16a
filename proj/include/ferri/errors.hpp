#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ferri {

/// Invalid user-facing configuration or precondition violation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested operator side exceeds the global dimension cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  DimensionCapExceeded(std::size_t required, std::size_t cap, const std::string& what);

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

/// The dense eigensolver failed on one magnetization sector.
class EigensolverError : public std::runtime_error {
 public:
  EigensolverError(int twice_m, std::size_t sector_size);

  int twice_m() const noexcept { return twice_m_; }

 private:
  int twice_m_;
};

/// No sign change of the negativity bracket below the temperature ceiling.
class ThresholdNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written; the message carries the path.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal numerical identity failed; indicates a bug or a corrupted state.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ferri

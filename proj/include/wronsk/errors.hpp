#pragma once

#include <stdexcept>

namespace wronsk {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PrecisionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LevelTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LevelMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotCuspidal : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotAUnit : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace wronsk

#pragma once

#include <cstddef>

namespace wordhom {

struct ResourceLimits {
  /// Total basis words a built complex may hold; WORDHOM_MAX_BASIS overrides.
  std::size_t max_basis = 2'000'000;
  /// Bar-complex generators allowed in a single degree.
  std::size_t max_generators = 20'000;

  /// Defaults with environment overrides applied.
  static ResourceLimits from_environment();
};

}  // namespace wordhom

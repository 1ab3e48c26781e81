#include "wordhom/limits.hpp"

#include <cstdlib>
#include <string>

namespace wordhom {

ResourceLimits ResourceLimits::from_environment() {
  ResourceLimits limits;
  if (const char* env = std::getenv("WORDHOM_MAX_BASIS")) {
    try {
      limits.max_basis = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // malformed override: keep the default
    }
  }
  return limits;
}

}  // namespace wordhom

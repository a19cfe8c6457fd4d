#include "idnf/error.hpp"

#include <cstdlib>
#include <string>

namespace idnf {

Fuel Fuel::standard() {
  constexpr std::size_t kDefault = 200'000;
  if (const char* env = std::getenv("IDNF_FUEL")) {
    try {
      return Fuel{static_cast<std::size_t>(std::stoull(env))};
    } catch (const std::exception&) {
      // malformed override: keep the default
    }
  }
  return Fuel{kDefault};
}

}  // namespace idnf

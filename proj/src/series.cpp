#include "sawstrip/series.hpp"

namespace sawstrip {

std::string to_string(PrecisionMode mode) {
  switch (mode) {
    case PrecisionMode::fast:
      return "fast";
    case PrecisionMode::high:
      return "high";
    case PrecisionMode::exact:
      return "exact";
  }
  return "?";
}

PrecisionMode parse_precision(std::string_view name) {
  if (name == "fast") return PrecisionMode::fast;
  if (name == "high") return PrecisionMode::high;
  if (name == "exact") return PrecisionMode::exact;
  throw SpecError("unknown precision mode '" + std::string(name) + "' (expected fast, high or exact)");
}

}  // namespace sawstrip

#include "hammock/csv.hpp"

#include <cmath>
#include <cstdio>

namespace hammock {

std::string format_length(double value) {
  if (!std::isfinite(value)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_length(*value) : std::string{};
}

std::string format_sources(bool sampled, std::size_t sources) {
  return sampled ? std::to_string(sources) : std::string("all");
}

}  // namespace hammock

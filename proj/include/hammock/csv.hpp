#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace hammock {

/// Lengths and other reals: 6 significant digits, `%g` style.
std::string format_length(double value);
/// Empty string for an absent value.
std::string format_optional(const std::optional<double>& value);
/// "all" for exact all-source runs, otherwise the sample size.
std::string format_sources(bool sampled, std::size_t sources);

}  // namespace hammock

#pragma once

#include <array>
#include <string>

namespace fri::cli {

/// Fixed-point text with `decimals` digits, correctly rounded (exact binary
/// ties go to even). Negative zero prints without a sign.
std::string fixed(double value, int decimals);

/// Shortest text that parses back to the same double.
std::string full_precision(double value);

std::string bracketed(const std::array<double, 4>& values, int decimals);

}  // namespace fri::cli

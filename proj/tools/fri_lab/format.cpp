#include "format.hpp"

#include <charconv>
#include <system_error>

namespace fri::cli {

std::string fixed(double value, int decimals) {
  char buf[128];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  std::string out = res.ec == std::errc{} ? std::string(buf, res.ptr) : std::string("nan");
  if (!out.empty() && out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string full_precision(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string bracketed(const std::array<double, 4>& values, int decimals) {
  std::string out = "[";
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ' ';
    out += fixed(values[j], decimals);
  }
  return out + "]";
}

}  // namespace fri::cli

#include "depknap/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace depknap {

std::string format_number(double x, int digits) {
  if (x == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, digits);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  const std::string s = format_number(x, digits);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

}  // namespace depknap

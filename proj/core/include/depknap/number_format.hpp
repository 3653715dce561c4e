#pragma once

#include <string>

namespace depknap {

// Significant digits used for every number the toolkit writes out.
inline constexpr int kOutputDigits = 12;

// Shortest locale-independent rendering with at most `digits` significant
// digits ("0.6", "10", "1e-07").
std::string format_number(double x, int digits = kOutputDigits);

// x rounded to `digits` significant digits; format_number(x) parses back to
// exactly this value.
double round_significant(double x, int digits = kOutputDigits);

}  // namespace depknap

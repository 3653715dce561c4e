#pragma once

#include <string>
#include <string_view>

#include "depknap/vdg.hpp"

namespace depknap {

// Parses the canonical instance JSON:
//
//   {"elements": [{"id": "e1", "value": 10, "weight": 5}, ...],
//    "capacity": 10,
//    "dependencies": [{"from": "e1", "to": "e3", "quality": "+", "strength": 0.9}, ...]}
//
// Schema errors throw InputError: unknown or missing fields, wrong types,
// quality other than "+" / "-" (U+2212 accepted), strength outside (0, 1],
// dependency endpoints naming no element. Semantic checks (negative values,
// duplicate ids, duplicate pairs) are left to validate().
Instance parse_instance(std::string_view text);

// Inverse of parse_instance for valid instances. Dependencies are written in
// explicit_edges order; numbers carry at most 12 significant digits.
std::string serialize_instance(const Instance& instance);

}  // namespace depknap

#pragma once

#include <cstdint>

#include "depknap/vdg.hpp"

namespace depknap {

struct GeneratorParams {
  std::size_t n = 1;
  double density = 0.3;         // probability that an ordered pair carries a dependency
  double negative_share = 0.3;  // probability that a dependency is negative
  std::uint64_t seed = 1;
};

// Seeded random instance: ids e1..en, integer values in [1, 100], integer
// weights in [1, 50], capacity = half the total weight rounded half up.
// Strengths are drawn uniformly from the grid {1e-6, 2e-6, ..., 1}.
// Output depends only on the parameters (no platform-specific distributions).
// Throws InputError for n = 0 or probabilities outside [0, 1].
Instance generate_instance(const GeneratorParams& params);

}  // namespace depknap

#include "depknap/generator.hpp"

#include <limits>
#include <random>
#include <string>

#include "depknap/error.hpp"

namespace depknap {

namespace {

// mt19937_64 output is fixed by the standard; the standard distributions
// are not, so the mappings below are done by hand.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], rejection sampled.
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + r % span;
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::uint64_t kStrengthGrid = 1'000'000;

}  // namespace

Instance generate_instance(const GeneratorParams& params) {
  if (params.n == 0) throw InputError("instance size must be at least 1");
  if (!(params.density >= 0.0 && params.density <= 1.0)) {
    throw InputError("density must lie in [0, 1]");
  }
  if (!(params.negative_share >= 0.0 && params.negative_share <= 1.0)) {
    throw InputError("negative share must lie in [0, 1]");
  }
  Draw draw(params.seed);
  Instance inst;
  std::uint64_t total_weight = 0;
  for (std::size_t i = 0; i < params.n; ++i) {
    const auto value = draw.integer(1, 100);
    const auto weight = draw.integer(1, 50);
    total_weight += weight;
    inst.elements.push_back({"e" + std::to_string(i + 1), static_cast<double>(value),
                             static_cast<double>(weight)});
  }
  inst.capacity = static_cast<double>((total_weight + 1) / 2);

  std::vector<DependencyEdge> edges;
  for (std::size_t i = 0; i < params.n; ++i) {
    for (std::size_t j = 0; j < params.n; ++j) {
      if (i == j) continue;
      if (!(draw.unit() < params.density)) continue;
      const Quality q = draw.unit() < params.negative_share ? Quality::Negative : Quality::Positive;
      const double s = static_cast<double>(draw.integer(1, kStrengthGrid)) / kStrengthGrid;
      edges.push_back({i, j, q, s});
    }
  }
  inst.vdg = Vdg(params.n, std::move(edges));
  return inst;
}

}  // namespace depknap

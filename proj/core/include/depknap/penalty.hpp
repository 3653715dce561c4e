#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "depknap/influence.hpp"
#include "depknap/vdg.hpp"

namespace depknap {

// Binary selection vector over the instance's elements.
struct Selection {
  std::vector<std::uint8_t> x;

  Selection() = default;
  explicit Selection(std::size_t n) : x(n, 0) {}
  explicit Selection(std::vector<std::uint8_t> bits) : x(std::move(bits)) {}

  std::size_t size() const { return x.size(); }
  bool selected(std::size_t i) const { return x[i] != 0; }

  friend bool operator==(const Selection&, const Selection&) = default;
};

using PenaltyVector = std::vector<double>;

// Term of the penalty supremum contributed by influencer j on element i:
// the positive part of I when j is ignored, the negative part when selected.
inline double penalty_term(double influence, bool influencer_selected) {
  const double sign = influencer_selected ? -1.0 : 1.0;
  return ((influence < 0 ? -influence : influence) + sign * influence) / 2.0;
}

// p_i = max over j != i of penalty_term(I(i, j), x_j); 0 when n = 1.
// Computed for every element, selected or not.
PenaltyVector penalties(const InfluenceMatrix& influence, const Selection& selection);

// Sum over selected i of (1 - p_i) * v_i.
double objective_value(const Instance& instance, const InfluenceMatrix& influence,
                       const Selection& selection);

double total_weight(const Instance& instance, const Selection& selection);

// Total selected weight does not exceed the capacity.
bool is_feasible(const Instance& instance, const Selection& selection);

}  // namespace depknap

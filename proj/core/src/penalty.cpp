#include "depknap/penalty.hpp"

#include <algorithm>
#include <string>

#include "depknap/error.hpp"

namespace depknap {

namespace {

void check_sizes(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + " has size " + std::to_string(got) + ", expected " +
                         std::to_string(expected));
  }
}

}  // namespace

PenaltyVector penalties(const InfluenceMatrix& influence, const Selection& selection) {
  const std::size_t n = influence.size();
  check_sizes(n, selection.size(), "selection");
  PenaltyVector p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      worst = std::max(worst, penalty_term(influence.influence(i, j), selection.selected(j)));
    }
    p[i] = worst;
  }
  return p;
}

double objective_value(const Instance& instance, const InfluenceMatrix& influence,
                       const Selection& selection) {
  check_sizes(instance.size(), influence.size(), "influence matrix");
  const auto p = penalties(influence, selection);
  double total = 0.0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (selection.selected(i)) total += (1.0 - p[i]) * instance.elements[i].value;
  }
  return total;
}

double total_weight(const Instance& instance, const Selection& selection) {
  check_sizes(instance.size(), selection.size(), "selection");
  double w = 0.0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (selection.selected(i)) w += instance.elements[i].weight;
  }
  return w;
}

bool is_feasible(const Instance& instance, const Selection& selection) {
  return total_weight(instance, selection) <= instance.capacity;
}

}  // namespace depknap

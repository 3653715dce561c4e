#include "depknap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "depknap/error.hpp"

namespace depknap {

std::string_view to_string(Proof proof) {
  return proof == Proof::Optimal ? "optimal" : "search_exhausted";
}

namespace {

void check_dimensions(const Instance& instance, const InfluenceMatrix& influence) {
  if (influence.size() != instance.size()) {
    throw DimensionError("influence matrix of size " + std::to_string(influence.size()) +
                         " does not match instance of size " + std::to_string(instance.size()));
  }
}

// Zero-weight elements first, then decreasing value / weight, ties by index.
std::vector<std::size_t> density_order(const Instance& instance, std::vector<std::size_t> items) {
  auto before = [&](std::size_t a, std::size_t b) {
    const auto& ea = instance.elements[a];
    const auto& eb = instance.elements[b];
    const bool za = ea.weight == 0.0, zb = eb.weight == 0.0;
    if (za != zb) return za;
    if (!za) {
      // Cross-multiplied to avoid division; weights are positive here.
      const double lhs = ea.value * eb.weight, rhs = eb.value * ea.weight;
      if (lhs != rhs) return lhs > rhs;
    }
    return a < b;
  };
  std::sort(items.begin(), items.end(), before);
  return items;
}

SolveResult make_result(const Instance& instance, const InfluenceMatrix& influence,
                        Selection selection, std::uint64_t nodes, Proof proof) {
  SolveResult r;
  r.penalties = penalties(influence, selection);
  r.objective = objective_value(instance, influence, selection);
  r.total_weight = total_weight(instance, selection);
  r.selection = std::move(selection);
  r.nodes_explored = nodes;
  r.proof = proof;
  return r;
}

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const InfluenceMatrix& influence)
      : instance_(instance),
        influence_(influence),
        decisions_(instance.size(), Decision::Undecided),
        best_(instance.size()) {
    std::vector<std::size_t> all(instance.size());
    std::iota(all.begin(), all.end(), 0);
    order_ = density_order(instance, std::move(all));
  }

  SolveResult run() {
    best_value_ = 0.0;  // the empty selection is always feasible
    visit(0, 0.0);
    return make_result(instance_, influence_, best_, nodes_, Proof::Optimal);
  }

 private:
  void visit(std::size_t depth, double weight) {
    ++nodes_;
    if (depth == order_.size()) {
      Selection s(instance_.size());
      for (std::size_t i = 0; i < s.size(); ++i) s.x[i] = decisions_[i] == Decision::Included;
      const double value = objective_value(instance_, influence_, s);
      // Ties go to the lexicographically smallest vector, matching solve_exhaustive.
      if (value > best_value_ || (value == best_value_ && s.x < best_.x)) {
        best_value_ = value;
        best_ = std::move(s);
      }
      return;
    }
    // Equal bounds are kept so a tied, lexicographically smaller selection is still found;
    // the slack absorbs rounding differences between the bound and objective_value.
    const double slack = 1e-9 * std::max(1.0, std::abs(best_value_));
    if (optimistic_bound(instance_, influence_, decisions_) < best_value_ - slack) return;

    const std::size_t item = order_[depth];
    const double w = instance_.elements[item].weight;
    if (weight + w <= instance_.capacity) {
      decisions_[item] = Decision::Included;
      visit(depth + 1, weight + w);
    }
    decisions_[item] = Decision::Excluded;
    visit(depth + 1, weight);
    decisions_[item] = Decision::Undecided;
  }

  const Instance& instance_;
  const InfluenceMatrix& influence_;
  std::vector<std::size_t> order_;
  std::vector<Decision> decisions_;
  Selection best_;
  double best_value_ = 0.0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

double optimistic_bound(const Instance& instance, const InfluenceMatrix& influence,
                        std::span<const Decision> decisions) {
  check_dimensions(instance, influence);
  const std::size_t n = instance.size();
  if (decisions.size() != n) throw DimensionError("decision vector does not match instance size");

  double used = 0.0;
  double bound = 0.0;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    if (decisions[i] == Decision::Undecided) {
      open.push_back(i);
      continue;
    }
    if (decisions[i] != Decision::Included) continue;
    used += instance.elements[i].weight;
    double p = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || decisions[j] == Decision::Undecided) continue;
      p = std::max(p, penalty_term(influence.influence(i, j), decisions[j] == Decision::Included));
    }
    bound += (1.0 - p) * instance.elements[i].value;
  }
  if (used > instance.capacity) return -std::numeric_limits<double>::infinity();

  double room = instance.capacity - used;
  for (std::size_t i : density_order(instance, std::move(open))) {
    const auto& el = instance.elements[i];
    if (el.weight <= room) {
      bound += el.value;
      room -= el.weight;
    } else {
      bound += el.value * (room / el.weight);
      break;
    }
  }
  return bound;
}

SolveResult solve_exhaustive(const Instance& instance, const InfluenceMatrix& influence,
                             ExhaustiveOptions options) {
  check_dimensions(instance, influence);
  const std::size_t n = instance.size();
  if (n > options.max_elements || n >= 63) {
    throw LimitError("exhaustive search is capped at " + std::to_string(options.max_elements) +
                     " elements (instance has " + std::to_string(n) + "); use branch-and-bound");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  Selection best(n);
  double best_value = -1.0;
  Selection s(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // x_0 is the most significant bit, so ascending masks visit selections
    // in lexicographic order and a strict '>' keeps the smallest maximizer.
    for (std::size_t i = 0; i < n; ++i) s.x[i] = (mask >> (n - 1 - i)) & 1u;
    if (!is_feasible(instance, s)) continue;
    const double value = objective_value(instance, influence, s);
    if (value > best_value) {
      best_value = value;
      best = s;
    }
  }
  return make_result(instance, influence, std::move(best), count, Proof::SearchExhausted);
}

SolveResult solve_bnb(const Instance& instance, const InfluenceMatrix& influence) {
  check_dimensions(instance, influence);
  return BranchAndBound(instance, influence).run();
}

}  // namespace depknap

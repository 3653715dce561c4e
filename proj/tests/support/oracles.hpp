#pragma once

// Reference computations used only by the test suites. Each one follows the
// textbook definition as directly as possible and shares no code path with
// the library routine it is checked against.

#include <cstdint>
#include <vector>

#include "depknap/influence.hpp"
#include "depknap/vdg.hpp"

namespace depknap::testing {

// Strongest positive / negative simple path by enumerating every ordered
// choice of distinct intermediate nodes (subset x permutation).
SignedStrengths naive_signed_strengths(const Vdg& vdg, NodeIndex from, NodeIndex to);

// Number of simple paths, by the same brute-force enumeration.
std::size_t naive_simple_path_count(const Vdg& vdg, NodeIndex from, NodeIndex to);

// Strongest positive / negative walk with at most `max_edges` edges, by
// dynamic programming over (edge count, node, sign).
SignedStrengths bounded_walk_strengths(const Vdg& vdg, NodeIndex from, NodeIndex to,
                                       std::size_t max_edges);

// Classical 0/1 knapsack optimum over integer weights.
double knapsack_dp(const std::vector<double>& values, const std::vector<std::int64_t>& weights,
                   std::int64_t capacity);

struct BruteForceOptimum {
  double objective = 0.0;
  std::vector<std::uint8_t> selection;  // lexicographically smallest maximizer
};

// Maximum of sum x_i (1 - p_i) v_i over feasible x, with p_i written out
// from the case analysis: ignored positive influencer contributes I,
// selected negative influencer contributes -I.
BruteForceOptimum brute_force_optimum(const Instance& instance, const SquareMatrix& influence);

// Objective of one selection by the same case analysis.
double direct_objective(const Instance& instance, const SquareMatrix& influence,
                        const std::vector<std::uint8_t>& x);

}  // namespace depknap::testing

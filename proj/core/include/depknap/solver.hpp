#pragma once

#include <cstdint>
#include <span>

#include "depknap/influence.hpp"
#include "depknap/penalty.hpp"
#include "depknap/vdg.hpp"

namespace depknap {

enum class Proof {
  Optimal,          // certified by branch-and-bound bounds
  SearchExhausted,  // every selection evaluated
};

std::string_view to_string(Proof proof);

struct SolveResult {
  Selection selection;
  double objective = 0.0;
  PenaltyVector penalties;
  double total_weight = 0.0;
  std::uint64_t nodes_explored = 0;
  Proof proof = Proof::Optimal;
};

struct ExhaustiveOptions {
  std::size_t max_elements = 20;
};

// Evaluates all 2^n selections. Ties go to the lexicographically smallest bit
// vector with x_0 most significant. Throws LimitError when n exceeds the cap.
SolveResult solve_exhaustive(const Instance& instance, const InfluenceMatrix& influence,
                             ExhaustiveOptions options = {});

// Depth-first branch-and-bound, include-branch first, over elements ordered
// zero-weight first then by decreasing value density (ties by index).
SolveResult solve_bnb(const Instance& instance, const InfluenceMatrix& influence);

enum class Decision : unsigned char { Undecided, Excluded, Included };

// Upper bound on the objective of every completion of a partial selection:
// decided elements are charged only penalties from decided influencers, and
// undecided elements are packed as a fractional knapsack at full value into
// the remaining capacity. Returns -infinity if the decided part is overweight.
double optimistic_bound(const Instance& instance, const InfluenceMatrix& influence,
                        std::span<const Decision> decisions);

}  // namespace depknap

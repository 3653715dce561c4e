#pragma once

#include <utility>
#include <vector>

#include "depknap/matrix.hpp"
#include "depknap/vdg.hpp"

namespace depknap {

// Aggregated signed strengths over all simple dependency paths per ordered
// pair, and the overall influence rho_pos - rho_neg. Diagonals are zero.
struct InfluenceMatrix {
  SquareMatrix rho_pos;
  SquareMatrix rho_neg;
  SquareMatrix influence;

  std::size_t size() const { return influence.size(); }
};

struct SignedStrengths {
  double positive = 0.0;
  double negative = 0.0;

  friend bool operator==(const SignedStrengths&, const SignedStrengths&) = default;
};

// Weakest-link strength of a path: the minimum edge strength along it.
// Throws InvalidPathError naming the first consecutive pair without an edge.
double path_strength(const Vdg& vdg, const DependencyPath& path);

// Sign product along the path (Positive iff an even number of negative edges).
Quality path_quality(const Vdg& vdg, const DependencyPath& path);

// All simple paths from `from` to `to` over explicit edges, in depth-first
// order visiting successors in ascending index.
std::vector<DependencyPath> enumerate_simple_paths(const Vdg& vdg, NodeIndex from, NodeIndex to);

// Strongest positive and strongest negative simple path from `from` to `to`;
// 0 for a sign with no path.
SignedStrengths signed_strengths(const Vdg& vdg, NodeIndex from, NodeIndex to);

InfluenceMatrix influence_matrix(const Vdg& vdg);

// Same aggregation over walks (node repetition allowed), computed as the
// least fixpoint of signed max-min composition. Diagonal entries are zeroed.
struct WalkClosure {
  SquareMatrix rho_pos;
  SquareMatrix rho_neg;
};

WalkClosure walk_closure(const Vdg& vdg);

}  // namespace depknap

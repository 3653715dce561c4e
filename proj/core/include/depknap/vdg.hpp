#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace depknap {

using NodeIndex = std::size_t;

// Sign of an explicit value-related dependency. NonSpecified marks the
// absence of an explicit dependency between an ordered pair.
enum class Quality : unsigned char { NonSpecified, Positive, Negative };

std::string_view to_string(Quality q);

// Sign product of two qualities. Either operand NonSpecified yields NonSpecified.
constexpr Quality compose(Quality a, Quality b) {
  if (a == Quality::NonSpecified || b == Quality::NonSpecified) return Quality::NonSpecified;
  return a == b ? Quality::Positive : Quality::Negative;
}

// One explicit dependency record: the value of `from` depends on selecting
// or ignoring `to`.
struct DependencyEdge {
  NodeIndex from = 0;
  NodeIndex to = 0;
  Quality quality = Quality::NonSpecified;
  double strength = 0.0;

  friend bool operator==(const DependencyEdge&, const DependencyEdge&) = default;
};

// Value Dependency Graph: a signed directed fuzzy graph over n elements.
//
// The graph keeps the edge records it was built from verbatim so that
// `validate` can report malformed input (duplicates, dangling indices,
// inconsistent sign/strength); lookups go through a dense n x n table
// filled from the in-range, non-self records (first record per pair wins).
class Vdg {
 public:
  Vdg() = default;
  Vdg(std::size_t n, std::vector<DependencyEdge> edges);

  std::size_t size() const { return n_; }

  // Quality and strength of the ordered pair; NonSpecified / 0 off-graph.
  Quality quality(NodeIndex i, NodeIndex j) const;
  double strength(NodeIndex i, NodeIndex j) const;
  bool has_edge(NodeIndex i, NodeIndex j) const { return strength(i, j) != 0.0; }

  // Targets j with strength(i, j) != 0, ascending.
  std::span<const NodeIndex> successors(NodeIndex i) const;

  // Edge records exactly as supplied at construction.
  const std::vector<DependencyEdge>& records() const { return records_; }

  friend bool operator==(const Vdg& a, const Vdg& b);

 private:
  std::size_t n_ = 0;
  std::vector<DependencyEdge> records_;
  std::vector<Quality> sigma_;
  std::vector<double> rho_;
  std::vector<std::vector<NodeIndex>> successors_;
};

struct Element {
  std::string id;
  double value = 0.0;
  double weight = 0.0;

  friend bool operator==(const Element&, const Element&) = default;
};

// Knapsack instance: elements (index = graph node), capacity, dependency graph.
struct Instance {
  std::vector<Element> elements;
  double capacity = 0.0;
  Vdg vdg;

  std::size_t size() const { return elements.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// A sequence of element indices joined by explicit dependencies.
struct DependencyPath {
  std::vector<NodeIndex> nodes;

  friend bool operator==(const DependencyPath&, const DependencyPath&) = default;
};

enum class ViolationKind {
  StrengthOutOfRange,
  SignStrengthMismatch,
  SelfDependency,
  DuplicateDependency,
  DanglingIndex,
  NegativeValue,
  NegativeWeight,
  NegativeCapacity,
  NonFiniteNumber,
  DuplicateId,
  SizeMismatch,
  NoElements,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Every invariant violation of the instance; empty means valid.
std::vector<Violation> validate(const Instance& instance);

// Graph-only checks (strength range, sign/strength consistency, self pairs,
// duplicates, dangling indices).
std::vector<Violation> validate(const Vdg& vdg);

// Ordered pairs with non-zero strength, ascending by (from, to).
std::vector<DependencyEdge> explicit_edges(const Vdg& vdg);

}  // namespace depknap

#include "depknap/influence.hpp"

#include <algorithm>
#include <string>

#include "depknap/error.hpp"

namespace depknap {

namespace {

void check_node(const Vdg& vdg, NodeIndex v) {
  if (v >= vdg.size()) {
    throw DimensionError("node " + std::to_string(v) + " outside graph of size " +
                         std::to_string(vdg.size()));
  }
}

void check_path(const Vdg& vdg, const DependencyPath& path) {
  const auto& nodes = path.nodes;
  if (nodes.size() < 2) throw InvalidPathError("a dependency path needs at least two elements");
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    if (!vdg.has_edge(nodes[k - 1], nodes[k])) {
      throw InvalidPathError("no explicit dependency from " + std::to_string(nodes[k - 1]) + " to " +
                             std::to_string(nodes[k]) + " at position " + std::to_string(k));
    }
  }
}

// Depth-first search for the strongest positive and negative simple paths
// into a fixed target. Successors are tried strongest first so incumbents
// rise early; a branch is cut once its running minimum cannot beat either
// incumbent. The result does not depend on visiting order.
class StrongestPathSearch {
 public:
  explicit StrongestPathSearch(const Vdg& vdg) : vdg_(vdg), order_(vdg.size()) {
    for (NodeIndex v = 0; v < vdg.size(); ++v) {
      auto succ = vdg.successors(v);
      order_[v].assign(succ.begin(), succ.end());
      std::stable_sort(order_[v].begin(), order_[v].end(), [&](NodeIndex a, NodeIndex b) {
        return vdg.strength(v, a) > vdg.strength(v, b);
      });
    }
  }

  SignedStrengths run(NodeIndex from, NodeIndex to) {
    best_ = {};
    target_ = to;
    mark_reaching(to);
    if (!reaches_[from]) return best_;
    on_path_.assign(vdg_.size(), false);
    on_path_[from] = true;
    descend(from, 1.0, Quality::Positive);
    return best_;
  }

 private:
  void mark_reaching(NodeIndex to) {
    const std::size_t n = vdg_.size();
    reaches_.assign(n, false);
    reaches_[to] = true;
    std::vector<NodeIndex> stack{to};
    while (!stack.empty()) {
      const NodeIndex v = stack.back();
      stack.pop_back();
      for (NodeIndex u = 0; u < n; ++u) {
        if (!reaches_[u] && vdg_.has_edge(u, v)) {
          reaches_[u] = true;
          stack.push_back(u);
        }
      }
    }
  }

  void descend(NodeIndex v, double running, Quality sign) {
    for (NodeIndex next : order_[v]) {
      if (on_path_[next] || !reaches_[next]) continue;
      const double m = std::min(running, vdg_.strength(v, next));
      // Successors are sorted by strength, so no later one can do better.
      if (m <= best_.positive && m <= best_.negative) break;
      const Quality q = compose(sign, vdg_.quality(v, next));
      if (next == target_) {
        double& slot = q == Quality::Positive ? best_.positive : best_.negative;
        slot = std::max(slot, m);
        continue;
      }
      on_path_[next] = true;
      descend(next, m, q);
      on_path_[next] = false;
    }
  }

  const Vdg& vdg_;
  std::vector<std::vector<NodeIndex>> order_;
  std::vector<bool> reaches_;
  std::vector<bool> on_path_;
  NodeIndex target_ = 0;
  SignedStrengths best_;
};

void enumerate_from(const Vdg& vdg, NodeIndex to, std::vector<NodeIndex>& stack,
                    std::vector<bool>& on_path, std::vector<DependencyPath>& out) {
  const NodeIndex v = stack.back();
  for (NodeIndex next : vdg.successors(v)) {
    if (on_path[next]) continue;
    stack.push_back(next);
    if (next == to) {
      out.push_back({stack});
    } else {
      on_path[next] = true;
      enumerate_from(vdg, to, stack, on_path, out);
      on_path[next] = false;
    }
    stack.pop_back();
  }
}

}  // namespace

double path_strength(const Vdg& vdg, const DependencyPath& path) {
  check_path(vdg, path);
  double s = 1.0;
  for (std::size_t k = 1; k < path.nodes.size(); ++k) {
    s = std::min(s, vdg.strength(path.nodes[k - 1], path.nodes[k]));
  }
  return s;
}

Quality path_quality(const Vdg& vdg, const DependencyPath& path) {
  check_path(vdg, path);
  Quality q = Quality::Positive;
  for (std::size_t k = 1; k < path.nodes.size(); ++k) {
    q = compose(q, vdg.quality(path.nodes[k - 1], path.nodes[k]));
  }
  return q;
}

std::vector<DependencyPath> enumerate_simple_paths(const Vdg& vdg, NodeIndex from, NodeIndex to) {
  check_node(vdg, from);
  check_node(vdg, to);
  std::vector<DependencyPath> out;
  if (from == to) return out;
  std::vector<NodeIndex> stack{from};
  std::vector<bool> on_path(vdg.size(), false);
  on_path[from] = true;
  enumerate_from(vdg, to, stack, on_path, out);
  return out;
}

SignedStrengths signed_strengths(const Vdg& vdg, NodeIndex from, NodeIndex to) {
  check_node(vdg, from);
  check_node(vdg, to);
  if (from == to) return {};
  return StrongestPathSearch(vdg).run(from, to);
}

InfluenceMatrix influence_matrix(const Vdg& vdg) {
  const std::size_t n = vdg.size();
  InfluenceMatrix m{SquareMatrix(n), SquareMatrix(n), SquareMatrix(n)};
  StrongestPathSearch search(vdg);
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto s = search.run(i, j);
      m.rho_pos(i, j) = s.positive;
      m.rho_neg(i, j) = s.negative;
      m.influence(i, j) = s.positive - s.negative;
    }
  }
  return m;
}

WalkClosure walk_closure(const Vdg& vdg) {
  const std::size_t n = vdg.size();
  SquareMatrix pos(n), neg(n);
  for (const auto& e : explicit_edges(vdg)) {
    (e.quality == Quality::Negative ? neg : pos)(e.from, e.to) = e.strength;
  }
  // Entries only ever take values from the finite set of edge strengths and
  // never decrease, so the iteration reaches a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    SquareMatrix next_pos = pos, next_neg = neg;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const double ip = pos(i, k), in = neg(i, k);
        if (ip == 0.0 && in == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const double kp = pos(k, j), kn = neg(k, j);
          next_pos(i, j) = std::max({next_pos(i, j), std::min(ip, kp), std::min(in, kn)});
          next_neg(i, j) = std::max({next_neg(i, j), std::min(ip, kn), std::min(in, kp)});
        }
      }
    }
    if (next_pos != pos || next_neg != neg) {
      changed = true;
      pos = std::move(next_pos);
      neg = std::move(next_neg);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    pos(i, i) = 0.0;
    neg(i, i) = 0.0;
  }
  return {std::move(pos), std::move(neg)};
}

}  // namespace depknap

#include "depknap/vdg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace depknap {

std::string_view to_string(Quality q) {
  switch (q) {
    case Quality::Positive: return "+";
    case Quality::Negative: return "-";
    case Quality::NonSpecified: break;
  }
  return "+-";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::StrengthOutOfRange: return "strength_out_of_range";
    case ViolationKind::SignStrengthMismatch: return "sign_strength_mismatch";
    case ViolationKind::SelfDependency: return "self_dependency";
    case ViolationKind::DuplicateDependency: return "duplicate_dependency";
    case ViolationKind::DanglingIndex: return "dangling_index";
    case ViolationKind::NegativeValue: return "negative_value";
    case ViolationKind::NegativeWeight: return "negative_weight";
    case ViolationKind::NegativeCapacity: return "negative_capacity";
    case ViolationKind::NonFiniteNumber: return "non_finite_number";
    case ViolationKind::DuplicateId: return "duplicate_id";
    case ViolationKind::SizeMismatch: return "size_mismatch";
    case ViolationKind::NoElements: return "no_elements";
  }
  return "unknown";
}

Vdg::Vdg(std::size_t n, std::vector<DependencyEdge> edges)
    : n_(n),
      records_(std::move(edges)),
      sigma_(n * n, Quality::NonSpecified),
      rho_(n * n, 0.0),
      successors_(n) {
  std::vector<bool> filled(n * n, false);
  for (const auto& e : records_) {
    if (e.from >= n || e.to >= n || e.from == e.to) continue;
    const std::size_t k = e.from * n + e.to;
    if (filled[k]) continue;
    filled[k] = true;
    sigma_[k] = e.quality;
    rho_[k] = e.strength;
  }
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = 0; j < n; ++j) {
      if (rho_[i * n + j] != 0.0) successors_[i].push_back(j);
    }
  }
}

Quality Vdg::quality(NodeIndex i, NodeIndex j) const {
  if (i >= n_ || j >= n_) return Quality::NonSpecified;
  return sigma_[i * n_ + j];
}

double Vdg::strength(NodeIndex i, NodeIndex j) const {
  if (i >= n_ || j >= n_) return 0.0;
  return rho_[i * n_ + j];
}

std::span<const NodeIndex> Vdg::successors(NodeIndex i) const {
  if (i >= n_) return {};
  return successors_[i];
}

namespace {

auto record_key(const DependencyEdge& e) {
  return std::make_tuple(e.from, e.to, static_cast<int>(e.quality), e.strength);
}

std::string pair_name(const DependencyEdge& e) {
  std::ostringstream os;
  os << "(" << e.from << ", " << e.to << ")";
  return os.str();
}

}  // namespace

bool operator==(const Vdg& a, const Vdg& b) {
  if (a.n_ != b.n_ || a.sigma_ != b.sigma_ || a.rho_ != b.rho_) return false;
  if (a.records_.size() != b.records_.size()) return false;
  auto sorted = [](std::vector<DependencyEdge> v) {
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return record_key(x) < record_key(y); });
    return v;
  };
  return sorted(a.records_) == sorted(b.records_);
}

std::vector<Violation> validate(const Vdg& vdg) {
  std::vector<Violation> out;
  const std::size_t n = vdg.size();
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const auto& e : vdg.records()) {
    const std::string where = pair_name(e);
    if (e.from >= n || e.to >= n) {
      out.push_back({ViolationKind::DanglingIndex,
                     "dependency " + where + " references a node outside 0.." +
                         std::to_string(n == 0 ? 0 : n - 1)});
      continue;
    }
    if (e.from == e.to) {
      out.push_back({ViolationKind::SelfDependency,
                     "dependency " + where + " is a self-pair; self-pairs carry no dependency"});
      continue;
    }
    if (!seen.emplace(e.from, e.to).second) {
      out.push_back({ViolationKind::DuplicateDependency,
                     "dependency " + where + " declared more than once"});
      continue;
    }
    if (!std::isfinite(e.strength)) {
      out.push_back({ViolationKind::NonFiniteNumber, "dependency " + where + " has a non-finite strength"});
      continue;
    }
    if (e.strength < 0.0 || e.strength > 1.0) {
      std::ostringstream os;
      os << "dependency " << where << " has strength " << e.strength << " outside [0, 1]";
      out.push_back({ViolationKind::StrengthOutOfRange, os.str()});
    }
    const bool unsigned_edge = e.quality == Quality::NonSpecified;
    if (e.strength == 0.0 && !unsigned_edge) {
      out.push_back({ViolationKind::SignStrengthMismatch,
                     "dependency " + where + " has zero strength but quality " +
                         std::string(to_string(e.quality))});
    } else if (e.strength != 0.0 && unsigned_edge) {
      out.push_back({ViolationKind::SignStrengthMismatch,
                     "dependency " + where + " has non-zero strength but non-specified quality"});
    }
  }
  return out;
}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  const auto& elements = instance.elements;
  if (elements.empty()) out.push_back({ViolationKind::NoElements, "instance has no elements"});
  if (instance.vdg.size() != elements.size()) {
    out.push_back({ViolationKind::SizeMismatch,
                   "graph has " + std::to_string(instance.vdg.size()) + " nodes but instance has " +
                       std::to_string(elements.size()) + " elements"});
  }
  if (!std::isfinite(instance.capacity)) {
    out.push_back({ViolationKind::NonFiniteNumber, "capacity is not finite"});
  } else if (instance.capacity < 0.0) {
    out.push_back({ViolationKind::NegativeCapacity, "capacity is negative"});
  }
  std::unordered_map<std::string, std::size_t> first_index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& el = elements[i];
    const std::string who = "element '" + el.id + "' (index " + std::to_string(i) + ")";
    if (!std::isfinite(el.value) || !std::isfinite(el.weight)) {
      out.push_back({ViolationKind::NonFiniteNumber, who + " has a non-finite value or weight"});
    }
    if (el.value < 0.0) out.push_back({ViolationKind::NegativeValue, who + " has a negative value"});
    if (el.weight < 0.0) out.push_back({ViolationKind::NegativeWeight, who + " has a negative weight"});
    auto [it, inserted] = first_index.emplace(el.id, i);
    if (!inserted) {
      out.push_back({ViolationKind::DuplicateId,
                     who + " repeats the id of index " + std::to_string(it->second)});
    }
  }
  auto graph = validate(instance.vdg);
  out.insert(out.end(), std::make_move_iterator(graph.begin()), std::make_move_iterator(graph.end()));
  return out;
}

std::vector<DependencyEdge> explicit_edges(const Vdg& vdg) {
  std::vector<DependencyEdge> out;
  for (NodeIndex i = 0; i < vdg.size(); ++i) {
    for (NodeIndex j : vdg.successors(i)) {
      out.push_back({i, j, vdg.quality(i, j), vdg.strength(i, j)});
    }
  }
  return out;
}

}  // namespace depknap

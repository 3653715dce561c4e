#include "milp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace depknap::testing {

namespace {

constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows, std::vector<double>(cols + 1, 0.0)), basis_(rows) {}

  std::vector<double>& row(std::size_t r) { return t_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return t_.size(); }
  double rhs(std::size_t r) const { return t_[r][cols_]; }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& p = t_[pr];
    const double inv = 1.0 / p[pc];
    for (double& v : p) v *= inv;
    p[pc] = 1.0;
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == pr) continue;
      const double f = t_[r][pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) t_[r][c] -= f * p[c];
      t_[r][pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  // Maximizes cost.z over columns allowed[c]; false if unbounded.
  bool optimize(const std::vector<double>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_ && enter == cols_; ++c) {
        if (!allowed[c]) continue;
        double d = cost[c];
        for (std::size_t r = 0; r < t_.size(); ++r) d -= cost[basis_[r]] * t_[r][c];
        if (d > kEps) enter = c;
      }
      if (enter == cols_) return true;
      std::size_t leave = t_.size();
      double best = kInf;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        const double a = t_[r][enter];
        if (a <= kEps) continue;
        const double ratio = t_[r][cols_] / a;
        // Bland: among (near-)tied ratios take the smallest basic column.
        if (leave == t_.size() || ratio < best - kEps ||
            (ratio <= best + kEps && basis_[r] < basis_[leave])) {
          best = std::min(best, ratio);
          leave = r;
        }
      }
      if (leave == t_.size()) return false;
      pivot(leave, enter);
    }
  }

  double value(const std::vector<double>& cost) const {
    double v = 0.0;
    for (std::size_t r = 0; r < t_.size(); ++r) v += cost[basis_[r]] * t_[r][cols_];
    return v;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const std::vector<double>& objective, const std::vector<LpRow>& rows_in,
                    const std::vector<double>& lower, const std::vector<double>& upper) {
  const std::size_t m = objective.size();
  // Shift z = lower + s, s >= 0; finite uppers become rows s_k <= upper - lower.
  std::vector<LpRow> rows;
  for (const auto& r : rows_in) {
    LpRow s = r;
    for (std::size_t k = 0; k < m; ++k) s.rhs -= r.coefficients[k] * lower[k];
    rows.push_back(std::move(s));
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (upper[k] == kInf) continue;
    LpRow b{std::vector<double>(m, 0.0), Sense::LessEqual, upper[k] - lower[k]};
    b.coefficients[k] = 1.0;
    rows.push_back(std::move(b));
  }
  for (auto& r : rows) {
    if (r.rhs < 0) {
      for (double& c : r.coefficients) c = -c;
      r.rhs = -r.rhs;
      if (r.sense == Sense::LessEqual) r.sense = Sense::GreaterEqual;
      else if (r.sense == Sense::GreaterEqual) r.sense = Sense::LessEqual;
    }
  }
  std::size_t slack = 0, artificial = 0;
  for (const auto& r : rows) {
    if (r.sense != Sense::Equal) ++slack;
    if (r.sense != Sense::LessEqual) ++artificial;
  }
  const std::size_t cols = m + slack + artificial;
  Tableau tab(rows.size(), cols);
  std::size_t next_slack = m, next_art = m + slack;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = tab.row(r);
    std::copy(rows[r].coefficients.begin(), rows[r].coefficients.end(), row.begin());
    row[cols] = rows[r].rhs;
    if (rows[r].sense == Sense::LessEqual) {
      row[next_slack] = 1.0;
      tab.basis(r) = next_slack++;
    } else {
      if (rows[r].sense == Sense::GreaterEqual) row[next_slack++] = -1.0;
      row[next_art] = 1.0;
      tab.basis(r) = next_art++;
    }
  }

  LpSolution out;
  std::vector<bool> allowed(cols, true);
  if (artificial > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t c = m + slack; c < cols; ++c) phase1[c] = -1.0;
    tab.optimize(phase1, allowed);
    if (tab.value(phase1) < -1e-7) return out;
    for (std::size_t r = tab.rows(); r-- > 0;) {
      if (tab.basis(r) < m + slack) continue;
      std::size_t c = 0;
      while (c < m + slack && std::abs(tab.row(r)[c]) <= kEps) ++c;
      if (c < m + slack) tab.pivot(r, c);
      else tab.drop_row(r);
    }
    for (std::size_t c = m + slack; c < cols; ++c) allowed[c] = false;
  }
  std::vector<double> cost(cols, 0.0);
  std::copy(objective.begin(), objective.end(), cost.begin());
  if (!tab.optimize(cost, allowed)) {
    out.status = LpSolution::Status::Unbounded;
    return out;
  }
  out.status = LpSolution::Status::Optimal;
  out.values = lower;
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis(r) < m) out.values[tab.basis(r)] += tab.rhs(r);
  }
  out.objective = 0.0;
  for (std::size_t k = 0; k < m; ++k) out.objective += objective[k] * out.values[k];
  return out;
}

namespace {

struct SparseRow {
  std::vector<std::pair<std::size_t, double>> terms;
  Sense sense;
  double rhs;
};

class Enumerator {
 public:
  explicit Enumerator(const MilpModel& model) : model_(model) {
    const std::size_t nv = model.variables.size();
    lo_.resize(nv);
    hi_.resize(nv);
    fixed_.assign(nv, false);
    value_.assign(nv, 0.0);
    objective_.assign(nv, 0.0);
    for (std::size_t k = 0; k < nv; ++k) {
      const auto& v = model.variables[k];
      lo_[k] = v.lower;
      hi_[k] = v.upper;
      if (v.kind == VariableKind::Binary) binaries_.push_back(k);
      else continuous_.push_back(k);
      if (v.kind == VariableKind::Continuous && v.lower == -kInf) {
        throw std::runtime_error("oracle needs finite lower bounds");
      }
    }
    auto index = [&](const std::string& name) {
      auto k = model.find_variable(name);
      if (!k) throw std::runtime_error("undeclared variable " + name);
      return *k;
    };
    for (const auto& t : model.objective.terms) objective_[index(t.variable)] += t.coefficient;
    if (model.objective.sense == ObjectiveSense::Minimize) {
      for (double& c : objective_) c = -c;
    }
    for (const auto& c : model.constraints) {
      SparseRow r{{}, c.sense, c.rhs};
      for (const auto& t : c.terms) r.terms.emplace_back(index(t.variable), t.coefficient);
      rows_.push_back(std::move(r));
    }
  }

  MilpSolution run() {
    best_.feasible = false;
    descend(0);
    if (best_.feasible && model_.objective.sense == ObjectiveSense::Minimize) {
      best_.objective = -best_.objective;
    }
    return best_;
  }

 private:
  bool consistent() const {
    for (const auto& r : rows_) {
      double amin = 0.0, amax = 0.0;
      for (auto [k, c] : r.terms) {
        double l = lo_[k], h = hi_[k];
        if (fixed_[k]) l = h = value_[k];
        amin += c >= 0 ? c * l : c * h;
        amax += c >= 0 ? c * h : c * l;
      }
      if (r.sense != Sense::GreaterEqual && amin > r.rhs + kEps) return false;
      if (r.sense != Sense::LessEqual && amax < r.rhs - kEps) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (!consistent()) return;
    if (depth == binaries_.size()) {
      leaf();
      return;
    }
    const std::size_t k = binaries_[depth];
    fixed_[k] = true;
    for (double v : {0.0, 1.0}) {
      value_[k] = v;
      descend(depth + 1);
    }
    fixed_[k] = false;
  }

  void leaf() {
    ++best_.leaves;
    const std::size_t m = continuous_.size();
    std::vector<std::size_t> col(model_.variables.size(), m);
    for (std::size_t c = 0; c < m; ++c) col[continuous_[c]] = c;
    std::vector<double> lo(m), hi(m), cost(m);
    double constant = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      lo[c] = lo_[continuous_[c]];
      hi[c] = hi_[continuous_[c]];
      cost[c] = objective_[continuous_[c]];
    }
    for (std::size_t k : binaries_) constant += objective_[k] * value_[k];

    std::vector<LpRow> rows;
    for (const auto& r : rows_) {
      double rhs = r.rhs;
      std::vector<std::pair<std::size_t, double>> free;
      for (auto [k, c] : r.terms) {
        if (col[k] == m) rhs -= c * value_[k];
        else free.emplace_back(col[k], c);
      }
      if (free.empty()) continue;  // already checked by propagation
      if (free.size() == 1 && free[0].second != 0.0) {
        // single-variable row: fold into the bounds
        auto [c, a] = free[0];
        const double bound = rhs / a;
        const bool upper = (r.sense == Sense::LessEqual) == (a > 0);
        if (r.sense == Sense::Equal) {
          lo[c] = std::max(lo[c], bound);
          hi[c] = std::min(hi[c], bound);
        } else if (upper) {
          hi[c] = std::min(hi[c], bound);
        } else {
          lo[c] = std::max(lo[c], bound);
        }
        continue;
      }
      LpRow row{std::vector<double>(m, 0.0), r.sense, rhs};
      for (auto [c, a] : free) row.coefficients[c] += a;
      rows.push_back(std::move(row));
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (lo[c] > hi[c] + kEps) return;
      hi[c] = std::max(hi[c], lo[c]);
    }
    const LpSolution lp = solve_lp(cost, rows, lo, hi);
    if (lp.status != LpSolution::Status::Optimal) return;
    const double total = constant + lp.objective;
    if (!best_.feasible || total > best_.objective) {
      best_.feasible = true;
      best_.objective = total;
      best_.values.clear();
      for (std::size_t k : binaries_) best_.values[model_.variables[k].name] = value_[k];
      for (std::size_t c = 0; c < m; ++c) best_.values[model_.variables[continuous_[c]].name] = lp.values[c];
    }
  }

  const MilpModel& model_;
  std::vector<double> lo_, hi_, value_, objective_;
  std::vector<bool> fixed_;
  std::vector<std::size_t> binaries_, continuous_;
  std::vector<SparseRow> rows_;
  MilpSolution best_;
};

}  // namespace

MilpSolution solve_by_enumeration(const MilpModel& model) { return Enumerator(model).run(); }

}  // namespace depknap::testing

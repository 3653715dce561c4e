#include "depknap/milp.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "depknap/error.hpp"
#include "depknap/number_format.hpp"

namespace depknap {

std::optional<std::size_t> MilpModel::find_variable(const std::string& name) const {
  for (std::size_t k = 0; k < variables.size(); ++k) {
    if (variables[k].name == name) return k;
  }
  return std::nullopt;
}

namespace {

std::string indexed(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

std::string indexed(const char* prefix, std::size_t i, std::size_t j) {
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

LinearTerm term(double c, std::string var) { return {round_significant(c), std::move(var)}; }

}  // namespace

MilpModel build_model(const Instance& instance, const InfluenceMatrix& influence,
                      BuildOptions options) {
  const std::size_t n = instance.size();
  if (influence.size() != n || instance.vdg.size() != n) {
    throw DimensionError("influence matrix of size " + std::to_string(influence.size()) +
                         " does not match instance of size " + std::to_string(n));
  }
  const bool keep_g = !options.eliminate_g;
  auto x = [](std::size_t i) { return indexed("x_", i); };
  auto y = [](std::size_t i) { return indexed("y_", i); };
  auto p = [](std::size_t i) { return indexed("p_", i); };
  auto g = [](std::size_t i) { return indexed("g_", i); };

  MilpModel model;
  for (std::size_t i = 0; i < n; ++i) model.variables.push_back({x(i), VariableKind::Binary, 0.0, 1.0});
  for (std::size_t i = 0; i < n; ++i) model.variables.push_back({y(i), VariableKind::Continuous, 0.0, 1.0});
  for (std::size_t i = 0; i < n; ++i) model.variables.push_back({p(i), VariableKind::Continuous, 0.0, 1.0});
  if (keep_g) {
    for (std::size_t i = 0; i < n; ++i) model.variables.push_back({g(i), VariableKind::Binary, 0.0, 1.0});
  }

  model.objective.sense = ObjectiveSense::Maximize;
  for (std::size_t i = 0; i < n; ++i) model.objective.terms.push_back(term(instance.elements[i].value, x(i)));
  for (std::size_t i = 0; i < n; ++i) model.objective.terms.push_back(term(-instance.elements[i].value, y(i)));

  LinearConstraint cap{"cap", {}, Sense::LessEqual, round_significant(instance.capacity)};
  for (std::size_t i = 0; i < n; ++i) cap.terms.push_back(term(instance.elements[i].weight, x(i)));
  model.constraints.push_back(std::move(cap));

  // p_i >= (|I| + (1 - 2 x_j) I) / 2, rearranged as p_i + I x_j >= (|I| + I) / 2.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double I = round_significant(influence.influence(i, j));
      if (I == 0.0) continue;
      model.constraints.push_back({indexed("pen_", i, j),
                                   {term(1.0, p(i)), term(I, x(j))},
                                   Sense::GreaterEqual,
                                   (std::abs(I) + I) / 2.0});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto& rows = model.constraints;
    if (keep_g) {
      rows.push_back({indexed("lnk_x_lo_", i), {term(1, x(i)), term(1, g(i))}, Sense::GreaterEqual, 0});
      rows.push_back({indexed("lnk_x_hi_", i), {term(1, x(i)), term(-1, g(i))}, Sense::LessEqual, 0});
      rows.push_back({indexed("lnk_xg_lo_", i), {term(1, x(i)), term(-1, g(i))}, Sense::GreaterEqual, 0});
      rows.push_back({indexed("lnk_xg_hi_", i), {term(1, x(i)), term(1, g(i))}, Sense::LessEqual, 2});
      rows.push_back({indexed("lnk_y_lo_", i), {term(1, y(i)), term(1, g(i))}, Sense::GreaterEqual, 0});
      rows.push_back({indexed("lnk_y_hi_", i), {term(1, y(i)), term(-1, g(i))}, Sense::LessEqual, 0});
      rows.push_back({indexed("lnk_yp_lo_", i), {term(1, y(i)), term(-1, p(i)), term(-1, g(i))},
                      Sense::GreaterEqual, -1});
      rows.push_back({indexed("lnk_yp_hi_", i), {term(1, y(i)), term(-1, p(i)), term(1, g(i))},
                      Sense::LessEqual, 1});
    } else {
      rows.push_back({indexed("lnk_y_lo_", i), {term(1, y(i))}, Sense::GreaterEqual, 0});
      rows.push_back({indexed("lnk_y_hi_", i), {term(1, y(i)), term(-1, x(i))}, Sense::LessEqual, 0});
      rows.push_back({indexed("lnk_yp_lo_", i), {term(1, y(i)), term(-1, p(i)), term(-1, x(i))},
                      Sense::GreaterEqual, -1});
      rows.push_back({indexed("lnk_yp_hi_", i), {term(1, y(i)), term(-1, p(i)), term(1, x(i))},
                      Sense::LessEqual, 1});
    }
  }
  return model;
}

std::vector<std::string> check_model(const MilpModel& model) {
  std::vector<std::string> problems;
  std::set<std::string> declared;
  for (const auto& v : model.variables) {
    if (!declared.insert(v.name).second) problems.push_back("variable '" + v.name + "' declared twice");
    if (!(v.lower <= v.upper)) problems.push_back("variable '" + v.name + "' has lower > upper");
    if (v.kind == VariableKind::Binary && (v.lower != 0.0 || v.upper != 1.0)) {
      problems.push_back("binary variable '" + v.name + "' must have bounds [0, 1]");
    }
  }
  auto check_terms = [&](const std::vector<LinearTerm>& terms, const std::string& where) {
    std::set<std::string> seen;
    for (const auto& t : terms) {
      if (!declared.count(t.variable)) {
        problems.push_back(where + " uses undeclared variable '" + t.variable + "'");
      }
      if (!seen.insert(t.variable).second) {
        problems.push_back(where + " repeats variable '" + t.variable + "'");
      }
    }
  };
  check_terms(model.objective.terms, "objective");
  std::set<std::string> labels;
  for (const auto& c : model.constraints) {
    if (!labels.insert(c.label).second) problems.push_back("constraint label '" + c.label + "' repeated");
    check_terms(c.terms, "constraint '" + c.label + "'");
  }
  return problems;
}

namespace {

double value_of(const std::map<std::string, double>& values, const std::string& name) {
  auto it = values.find(name);
  return it == values.end() ? 0.0 : it->second;
}

double activity(const std::vector<LinearTerm>& terms, const std::map<std::string, double>& values) {
  double s = 0.0;
  for (const auto& t : terms) s += t.coefficient * value_of(values, t.variable);
  return s;
}

}  // namespace

double evaluate_objective(const MilpModel& model, const std::map<std::string, double>& values) {
  return activity(model.objective.terms, values);
}

std::vector<std::string> assignment_violations(const MilpModel& model,
                                               const std::map<std::string, double>& values,
                                               double tolerance) {
  std::vector<std::string> out;
  for (const auto& v : model.variables) {
    const double a = value_of(values, v.name);
    if (a < v.lower - tolerance || a > v.upper + tolerance) out.push_back("bound:" + v.name);
    if (v.kind == VariableKind::Binary && std::abs(a - std::round(a)) > tolerance) {
      out.push_back("integrality:" + v.name);
    }
  }
  for (const auto& c : model.constraints) {
    const double lhs = activity(c.terms, values);
    bool ok = true;
    switch (c.sense) {
      case Sense::LessEqual: ok = lhs <= c.rhs + tolerance; break;
      case Sense::GreaterEqual: ok = lhs >= c.rhs - tolerance; break;
      case Sense::Equal: ok = std::abs(lhs - c.rhs) <= tolerance; break;
    }
    if (!ok) out.push_back(c.label);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxLineLength = 200;

std::string bound_text(double b) {
  if (b == std::numeric_limits<double>::infinity()) return "+inf";
  if (b == -std::numeric_limits<double>::infinity()) return "-inf";
  return format_number(b);
}

// Writes "label: t1 + t2 - t3" wrapping long rows onto indented lines.
void write_row(std::ostringstream& os, const std::string& label, const std::vector<LinearTerm>& terms) {
  std::string line = " " + label + ":";
  bool first = true;
  for (const auto& t : terms) {
    std::string piece;
    const bool negative = std::signbit(t.coefficient) && t.coefficient != 0.0;
    const double magnitude = std::abs(t.coefficient);
    if (negative) {
      piece = " -";
    } else if (!first) {
      piece = " +";
    }
    if (magnitude != 1.0) piece += " " + format_number(magnitude);
    piece += " " + t.variable;
    if (line.size() + piece.size() > kMaxLineLength) {
      os << line << '\n';
      line = "   ";
    }
    line += piece;
    first = false;
  }
  os << line;
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::LessEqual: return "<=";
    case Sense::GreaterEqual: return ">=";
    case Sense::Equal: return "=";
  }
  return "=";
}

}  // namespace

std::string export_lp(const MilpModel& model) {
  std::ostringstream os;
  os << (model.objective.sense == ObjectiveSense::Maximize ? "Maximize" : "Minimize") << '\n';
  write_row(os, "obj", model.objective.terms);
  os << "\nSubject To\n";
  for (const auto& c : model.constraints) {
    write_row(os, c.label, c.terms);
    os << ' ' << sense_text(c.sense) << ' ' << format_number(c.rhs) << '\n';
  }
  os << "Bounds\n";
  for (const auto& v : model.variables) {
    os << ' ' << bound_text(v.lower) << " <= " << v.name << " <= " << bound_text(v.upper) << '\n';
  }
  bool any_binary = false;
  for (const auto& v : model.variables) {
    if (v.kind != VariableKind::Binary) continue;
    if (!any_binary) os << "Binary\n";
    any_binary = true;
    os << ' ' << v.name << '\n';
  }
  os << "End\n";
  return os.str();
}

}  // namespace depknap

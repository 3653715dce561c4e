#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "depknap/influence.hpp"
#include "depknap/vdg.hpp"

namespace depknap {

enum class VariableKind { Binary, Continuous };

struct VariableDef {
  std::string name;
  VariableKind kind = VariableKind::Continuous;
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const VariableDef&, const VariableDef&) = default;
};

struct LinearTerm {
  double coefficient = 0.0;
  std::string variable;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::string label;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

enum class ObjectiveSense { Maximize, Minimize };

struct Objective {
  ObjectiveSense sense = ObjectiveSense::Maximize;
  std::vector<LinearTerm> terms;

  friend bool operator==(const Objective&, const Objective&) = default;
};

// Solver-agnostic mixed-integer linear model.
struct MilpModel {
  Objective objective;
  std::vector<VariableDef> variables;
  std::vector<LinearConstraint> constraints;

  std::optional<std::size_t> find_variable(const std::string& name) const;

  friend bool operator==(const MilpModel&, const MilpModel&) = default;
};

struct BuildOptions {
  // Substitute the auxiliary g_i by x_i; the linking constraints force
  // g_i = x_i over binaries, so the optimum is unchanged.
  bool eliminate_g = true;
};

// Linearized dependency-aware knapsack model. Variables, in declaration
// order: x_i (binary), y_i = x_i * p_i, p_i (both continuous in [0, 1]) and,
// unless eliminated, g_i (binary). Rows: "cap", one "pen_i_j" per non-zero
// influence, and four (g eliminated) or eight linking rows "lnk_*_i" per
// element. Coefficients are stored rounded to 12 significant digits so the
// model survives LP text export unchanged.
MilpModel build_model(const Instance& instance, const InfluenceMatrix& influence,
                      BuildOptions options = {});

// Structural problems: undeclared or duplicate variables, duplicate terms
// within a row, inverted bounds, binaries with bounds other than [0, 1].
std::vector<std::string> check_model(const MilpModel& model);

// Objective value of a full assignment (variable name -> value).
double evaluate_objective(const MilpModel& model, const std::map<std::string, double>& values);

// Labels of rows violated by more than `tolerance`, plus "bound:<var>" and
// "integrality:<var>" entries. Unassigned variables count as 0.
std::vector<std::string> assignment_violations(const MilpModel& model,
                                               const std::map<std::string, double>& values,
                                               double tolerance = 1e-9);

// CPLEX-style LP text: Maximize/Minimize, Subject To, Bounds (every variable,
// in declaration order), Binary, End. Deterministic and locale independent.
std::string export_lp(const MilpModel& model);

}  // namespace depknap

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "depknap/error.hpp"
#include "depknap/generator.hpp"
#include "depknap/influence.hpp"
#include "depknap/instance_json.hpp"
#include "depknap/milp.hpp"
#include "depknap/number_format.hpp"
#include "depknap/penalty.hpp"
#include "depknap/solver.hpp"

namespace depknap::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Carries an exit code and a machine-readable error category.
struct CommandError {
  int code;
  std::string category;
  std::string message;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CommandError{kInvalidInput, "io", "cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw CommandError{kInvalidInput, "io", "cannot write '" + output + "'"};
  file << text;
}

Instance load_instance(const std::string& path, std::istream& in) {
  return parse_instance(read_all(path, in));
}

Instance load_valid_instance(const std::string& path, std::istream& in) {
  Instance inst = load_instance(path, in);
  const auto violations = validate(inst);
  if (!violations.empty()) {
    std::string msg = "instance is invalid: " + violations.front().message;
    if (violations.size() > 1) msg += " (and " + std::to_string(violations.size() - 1) + " more)";
    throw CommandError{kInvalidInput, "invalid_instance", msg};
  }
  return inst;
}

double num(double x) { return round_significant(x); }

ojson matrix_json(const SquareMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(num(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_table(const std::string& title, const SquareMatrix& m, const Instance& inst) {
  std::size_t width = 8;
  for (const auto& el : inst.elements) width = std::max(width, el.id.size() + 2);
  std::ostringstream os;
  os << title << '\n' << std::setw(static_cast<int>(width)) << "";
  for (const auto& el : inst.elements) os << std::setw(static_cast<int>(width)) << el.id;
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << std::setw(static_cast<int>(width)) << inst.elements[i].id;
    for (std::size_t j = 0; j < m.size(); ++j) {
      os << std::setw(static_cast<int>(width)) << format_number(m(i, j), 4);
    }
    os << '\n';
  }
  return os.str();
}

ojson selection_ids(const Instance& inst, const Selection& s) {
  ojson ids = ojson::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.selected(i)) ids.push_back(inst.elements[i].id);
  }
  return ids;
}

ojson penalty_json(const Instance& inst, const PenaltyVector& p) {
  ojson obj = ojson::object();
  for (std::size_t i = 0; i < p.size(); ++i) obj[inst.elements[i].id] = num(p[i]);
  return obj;
}

Selection selection_from_ids(const Instance& inst, const std::vector<std::string>& ids) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < inst.size(); ++i) index.emplace(inst.elements[i].id, i);
  Selection s(inst.size());
  for (const auto& id : ids) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw CommandError{kInvalidInput, "unknown_id", "selection names unknown element id '" + id + "'"};
    }
    s.x[it->second] = 1;
  }
  return s;
}

Selection selection_from_mask(const Instance& inst, const std::string& mask) {
  if (mask.size() != inst.size()) {
    throw CommandError{kInvalidInput, "bad_mask",
                       "mask has " + std::to_string(mask.size()) + " digits, instance has " +
                           std::to_string(inst.size()) + " elements"};
  }
  Selection s(inst.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != '0' && mask[i] != '1') {
      throw CommandError{kInvalidInput, "bad_mask", "mask must contain only 0 and 1"};
    }
    s.x[i] = mask[i] == '1';
  }
  return s;
}

std::vector<std::string> ids_from_result(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw CommandError{kInvalidInput, "input", std::string("malformed result JSON: ") + e.what()};
  }
  if (!doc.is_object() || !doc.contains("selection") || !doc["selection"].is_array()) {
    throw CommandError{kInvalidInput, "input", "result JSON needs a 'selection' array of ids"};
  }
  std::vector<std::string> ids;
  for (const auto& v : doc["selection"]) {
    if (!v.is_string()) throw CommandError{kInvalidInput, "input", "selection ids must be strings"};
    ids.push_back(v.get<std::string>());
  }
  return ids;
}

struct Options {
  std::string input = "-";
  std::string output;
  bool walks = false;
  bool table = false;
  std::string select;
  std::string mask;
  std::string result_path;
  std::string method = "bnb";
  bool json = false;
  std::size_t exhaustive_cap = ExhaustiveOptions{}.max_elements;
  bool keep_g = false;
  GeneratorParams gen;
};

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const Instance inst = load_instance(o.input, in);
  const auto violations = validate(inst);
  ojson doc;
  doc["valid"] = violations.empty();
  ojson list = ojson::array();
  for (const auto& v : violations) {
    list.push_back({{"rule", std::string(to_string(v.kind))}, {"message", v.message}});
  }
  doc["violations"] = std::move(list);
  emit(doc.dump(2) + "\n", o.output, out);
  return violations.empty() ? kSuccess : kInvalidInput;
}

int cmd_influence(const Options& o, std::istream& in, std::ostream& out) {
  const Instance inst = load_valid_instance(o.input, in);
  const InfluenceMatrix m = influence_matrix(inst.vdg);
  std::optional<WalkClosure> walks;
  if (o.walks) walks = walk_closure(inst.vdg);

  if (o.table) {
    std::string text = matrix_table("rho_pos", m.rho_pos, inst) + "\n" +
                       matrix_table("rho_neg", m.rho_neg, inst) + "\n" +
                       matrix_table("influence", m.influence, inst);
    if (walks) {
      text += "\n" + matrix_table("rho_pos_walk", walks->rho_pos, inst) + "\n" +
              matrix_table("rho_neg_walk", walks->rho_neg, inst);
    }
    emit(text, o.output, out);
    return kSuccess;
  }
  ojson doc;
  ojson ids = ojson::array();
  for (const auto& el : inst.elements) ids.push_back(el.id);
  doc["ids"] = std::move(ids);
  doc["rho_pos"] = matrix_json(m.rho_pos);
  doc["rho_neg"] = matrix_json(m.rho_neg);
  doc["influence"] = matrix_json(m.influence);
  if (walks) {
    doc["rho_pos_walk"] = matrix_json(walks->rho_pos);
    doc["rho_neg_walk"] = matrix_json(walks->rho_neg);
  }
  emit(doc.dump(2) + "\n", o.output, out);
  return kSuccess;
}

int cmd_eval(const Options& o, std::istream& in, std::ostream& out) {
  const int given = !o.select.empty() + !o.mask.empty() + !o.result_path.empty();
  if (given != 1) {
    throw CommandError{kInvalidInput, "usage", "eval needs exactly one of --select, --mask, --result"};
  }
  if (!o.result_path.empty() && o.result_path == "-" && o.input == "-") {
    throw CommandError{kInvalidInput, "usage", "instance and --result cannot both come from stdin"};
  }
  const Instance inst = load_valid_instance(o.input, in);
  Selection s;
  if (!o.mask.empty()) {
    s = selection_from_mask(inst, o.mask);
  } else if (!o.select.empty()) {
    std::vector<std::string> ids;
    std::stringstream ss(o.select);
    for (std::string id; std::getline(ss, id, ',');) {
      if (!id.empty()) ids.push_back(id);
    }
    s = selection_from_ids(inst, ids);
  } else {
    s = selection_from_ids(inst, ids_from_result(read_all(o.result_path, in)));
  }
  const InfluenceMatrix m = influence_matrix(inst.vdg);
  ojson doc;
  doc["selection"] = selection_ids(inst, s);
  doc["feasible"] = is_feasible(inst, s);
  doc["total_weight"] = num(total_weight(inst, s));
  doc["capacity"] = num(inst.capacity);
  doc["objective"] = num(objective_value(inst, m, s));
  doc["penalties"] = penalty_json(inst, penalties(m, s));
  emit(doc.dump(2) + "\n", o.output, out);
  return kSuccess;
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  const Instance inst = load_valid_instance(o.input, in);
  const InfluenceMatrix m = influence_matrix(inst.vdg);
  const SolveResult r = o.method == "exhaustive"
                            ? solve_exhaustive(inst, m, ExhaustiveOptions{o.exhaustive_cap})
                            : solve_bnb(inst, m);
  if (o.json) {
    ojson doc;
    doc["method"] = o.method;
    doc["proof"] = std::string(to_string(r.proof));
    doc["objective"] = num(r.objective);
    doc["selection"] = selection_ids(inst, r.selection);
    doc["total_weight"] = num(r.total_weight);
    doc["capacity"] = num(inst.capacity);
    doc["nodes_explored"] = r.nodes_explored;
    doc["penalties"] = penalty_json(inst, r.penalties);
    emit(doc.dump(2) + "\n", o.output, out);
    return kSuccess;
  }
  std::ostringstream os;
  std::string ids;
  for (const auto& id : selection_ids(inst, r.selection)) {
    if (!ids.empty()) ids += ",";
    ids += id.get<std::string>();
  }
  os << "objective: " << format_number(r.objective) << '\n'
     << "selection: " << ids << '\n'
     << "weight: " << format_number(r.total_weight) << " / " << format_number(inst.capacity) << '\n'
     << "nodes explored: " << r.nodes_explored << '\n'
     << "proof: " << to_string(r.proof) << '\n';
  emit(os.str(), o.output, out);
  return kSuccess;
}

int cmd_export_lp(const Options& o, std::istream& in, std::ostream& out) {
  const Instance inst = load_valid_instance(o.input, in);
  const auto model = build_model(inst, influence_matrix(inst.vdg), BuildOptions{!o.keep_g});
  emit(export_lp(model), o.output, out);
  return kSuccess;
}

int cmd_gen(const Options& o, std::ostream& out) {
  emit(serialize_instance(generate_instance(o.gen)), o.output, out);
  return kSuccess;
}

void error_line(std::ostream& err, const std::string& category, const std::string& message) {
  ojson e;
  e["error"] = category;
  e["message"] = message;
  err << e.dump() << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver toolkit for knapsack problems with signed fuzzy value dependencies",
               "depknap"};
  app.require_subcommand(1);
  Options o;

  auto input_arg = [&](CLI::App* sub) {
    sub->add_option("instance", o.input, "Instance JSON path, or - for standard input")->required();
    sub->add_option("-o,--output", o.output, "Write output to this path instead of standard output");
  };

  auto* check = app.add_subcommand("check", "Validate an instance and list every violation");
  input_arg(check);

  auto* influence = app.add_subcommand("influence", "Print aggregated signed strengths and influences");
  input_arg(influence);
  influence->add_flag("--walks", o.walks, "Also report the walk-based closure");
  influence->add_flag("--table", o.table, "Human-readable aligned tables instead of JSON");

  auto* eval = app.add_subcommand("eval", "Evaluate penalties, feasibility and objective of a selection");
  input_arg(eval);
  eval->add_option("--select", o.select, "Comma-separated element ids");
  eval->add_option("--mask", o.mask, "Bit string, first digit is the first element");
  eval->add_option("--result", o.result_path, "JSON file with a 'selection' array (e.g. solve --json)");

  auto* solve = app.add_subcommand("solve", "Find an optimal selection");
  input_arg(solve);
  solve->add_option("--method", o.method, "Search method")
      ->check(CLI::IsMember({"bnb", "exhaustive"}))
      ->capture_default_str();
  solve->add_flag("--json", o.json, "Emit the result as JSON");
  solve->add_option("--exhaustive-cap", o.exhaustive_cap, "Largest instance accepted by exhaustive search")
      ->capture_default_str();

  auto* export_cmd = app.add_subcommand("export-lp", "Write the linearized integer program in LP format");
  input_arg(export_cmd);
  export_cmd->add_flag("--keep-g", o.keep_g, "Keep the auxiliary g variables instead of substituting x");

  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--n", o.gen.n, "Number of elements")->required()->check(CLI::PositiveNumber);
  gen->add_option("--density", o.gen.density, "Dependency probability per ordered pair")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--neg", o.gen.negative_share, "Probability that a dependency is negative")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--seed", o.gen.seed, "Random seed")->capture_default_str();
  gen->add_option("-o,--output", o.output, "Write output to this path instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return kInvalidInput;
  }

  try {
    if (check->parsed()) return cmd_check(o, in, out);
    if (influence->parsed()) return cmd_influence(o, in, out);
    if (eval->parsed()) return cmd_eval(o, in, out);
    if (solve->parsed()) return cmd_solve(o, in, out);
    if (export_cmd->parsed()) return cmd_export_lp(o, in, out);
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const CommandError& e) {
    error_line(err, e.category, e.message);
    return e.code;
  } catch (const LimitError& e) {
    error_line(err, "limit", e.what());
    return kLimitExceeded;
  } catch (const InputError& e) {
    error_line(err, "input", e.what());
    return kInvalidInput;
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what());
    return kInvalidInput;
  }
  error_line(err, "usage", "no command given");
  return kInvalidInput;
}

}  // namespace depknap::cli

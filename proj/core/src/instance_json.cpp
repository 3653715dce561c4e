#include "depknap/instance_json.hpp"

#include <initializer_list>
#include <nlohmann/json.hpp>
#include <unordered_map>

#include "depknap/error.hpp"
#include "depknap/number_format.hpp"

namespace depknap {

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::string_view what,
                  std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (auto k : required) known = known || it.key() == k;
    for (auto k : optional) known = known || it.key() == k;
    if (!known) throw InputError("unknown field '" + it.key() + "' in " + std::string(what));
  }
  for (auto k : required) {
    if (!obj.contains(std::string(k))) {
      throw InputError("missing field '" + std::string(k) + "' in " + std::string(what));
    }
  }
}

double number_field(const json& obj, const char* key, const std::string& what) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw InputError("field '" + std::string(key) + "' of " + what + " must be a number");
  return v.get<double>();
}

std::string string_field(const json& obj, const char* key, const std::string& what) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw InputError("field '" + std::string(key) + "' of " + what + " must be a string");
  return v.get<std::string>();
}

Quality parse_quality(const std::string& s, const std::string& what) {
  if (s == "+") return Quality::Positive;
  if (s == "-" || s == "−") return Quality::Negative;
  throw InputError("quality of " + what + " must be \"+\" or \"-\", got \"" + s + "\"");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(doc, "instance", {"elements", "capacity"}, {"dependencies"});

  Instance inst;
  const auto& elements = doc.at("elements");
  if (!elements.is_array()) throw InputError("'elements' must be an array");
  std::unordered_map<std::string, NodeIndex> index_of;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string what = "elements[" + std::to_string(i) + "]";
    const auto& e = elements[i];
    require_keys(e, what, {"id", "value", "weight"});
    Element el{string_field(e, "id", what), number_field(e, "value", what),
               number_field(e, "weight", what)};
    index_of.emplace(el.id, i);
    inst.elements.push_back(std::move(el));
  }
  if (!doc.at("capacity").is_number()) throw InputError("'capacity' must be a number");
  inst.capacity = doc.at("capacity").get<double>();

  std::vector<DependencyEdge> edges;
  if (doc.contains("dependencies")) {
    const auto& deps = doc.at("dependencies");
    if (!deps.is_array()) throw InputError("'dependencies' must be an array");
    for (std::size_t k = 0; k < deps.size(); ++k) {
      const std::string what = "dependencies[" + std::to_string(k) + "]";
      const auto& d = deps[k];
      require_keys(d, what, {"from", "to", "quality", "strength"});
      auto endpoint = [&](const char* key) {
        const std::string id = string_field(d, key, what);
        auto it = index_of.find(id);
        if (it == index_of.end()) {
          throw InputError(what + " refers to unknown element id '" + id + "'");
        }
        return it->second;
      };
      DependencyEdge edge;
      edge.from = endpoint("from");
      edge.to = endpoint("to");
      edge.quality = parse_quality(string_field(d, "quality", what), what);
      edge.strength = number_field(d, "strength", what);
      if (!(edge.strength > 0.0 && edge.strength <= 1.0)) {
        throw InputError("strength of " + what + " must lie in (0, 1]");
      }
      edges.push_back(edge);
    }
  }
  inst.vdg = Vdg(inst.elements.size(), std::move(edges));
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  ojson elements = ojson::array();
  for (const auto& el : instance.elements) {
    elements.push_back({{"id", el.id},
                        {"value", round_significant(el.value)},
                        {"weight", round_significant(el.weight)}});
  }
  doc["elements"] = std::move(elements);
  doc["capacity"] = round_significant(instance.capacity);
  ojson deps = ojson::array();
  for (const auto& e : explicit_edges(instance.vdg)) {
    deps.push_back({{"from", instance.elements.at(e.from).id},
                    {"to", instance.elements.at(e.to).id},
                    {"quality", std::string(to_string(e.quality))},
                    {"strength", round_significant(e.strength)}});
  }
  doc["dependencies"] = std::move(deps);
  return doc.dump(2) + "\n";
}

}  // namespace depknap

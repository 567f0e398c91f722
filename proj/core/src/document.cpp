#include "softtop/document.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "softtop/errors.hpp"

namespace softtop {

using json = nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

struct Loader {
  std::vector<Diagnostic>& diagnostics;

  void fail(Diagnostic::Kind kind, std::string where, std::string message) {
    diagnostics.push_back({kind, std::move(where), std::move(message)});
  }

  bool expect_object(const json& j, const std::string& path) {
    if (j.is_object()) return true;
    fail(Diagnostic::Kind::Syntax, path, "expected an object");
    return false;
  }

  std::optional<std::vector<std::string>> string_list(const json& j, const std::string& path) {
    if (!j.is_array()) {
      fail(Diagnostic::Kind::Syntax, path, "expected an array of strings");
      return std::nullopt;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string()) {
        fail(Diagnostic::Kind::Syntax, path + "[" + std::to_string(i) + "]",
             "expected a string");
        return std::nullopt;
      }
      out.push_back(j[i].get<std::string>());
    }
    return out;
  }

  std::optional<SoftSet> soft_set_value(const json& j, const ContextPtr& ctx,
                                        const std::string& path) {
    if (!expect_object(j, path)) return std::nullopt;
    std::map<std::string, std::vector<std::string>> assignments;
    for (const auto& [param, elems] : j.items()) {
      auto list = string_list(elems, path + "/" + param);
      if (!list) return std::nullopt;
      assignments[param] = std::move(*list);
    }
    try {
      return SoftSet::make(ctx, assignments);
    } catch (const UnknownParameter& e) {
      fail(Diagnostic::Kind::UnknownReference, path,
           "unknown parameter \"" + e.identifier + "\"");
    } catch (const UnknownElement& e) {
      fail(Diagnostic::Kind::UnknownReference, path,
           "unknown element \"" + e.identifier + "\"");
    }
    return std::nullopt;
  }
};

}  // namespace

std::string Diagnostic::render() const {
  const char* kind_name = kind == Kind::Syntax             ? "syntax error"
                          : kind == Kind::UnknownReference ? "unknown reference"
                                                           : "axiom violation";
  return std::string(kind_name) + " at " + where + ": " + message;
}

const NamedSpace* StructureDocument::find_space(std::string_view name) const {
  for (const auto& entry : spaces)
    if (entry.name == name) return &entry;
  return nullptr;
}

const NamedSoftSet* StructureDocument::find_soft_set(std::string_view name) const {
  for (const auto& entry : soft_sets)
    if (entry.name == name) return &entry;
  return nullptr;
}

const NamedMapping* StructureDocument::find_mapping(std::string_view name) const {
  for (const auto& entry : mappings)
    if (entry.name == name) return &entry;
  return nullptr;
}

ParseResult parse_document(std::string_view text) {
  ParseResult result;
  Loader loader{result.diagnostics};

  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    loader.fail(Diagnostic::Kind::Syntax, line_column(text, e.byte), e.what());
    return result;
  }
  if (!root.is_object()) {
    loader.fail(Diagnostic::Kind::Syntax, "line 1, column 1", "top level must be an object");
    return result;
  }
  for (const auto& [key, value] : root.items()) {
    if (key != "params" && key != "spaces" && key != "soft_sets" && key != "mappings")
      loader.fail(Diagnostic::Kind::Syntax, "/" + key, "unknown top-level key");
  }

  StructureDocument doc;

  if (!root.contains("params")) {
    loader.fail(Diagnostic::Kind::Syntax, "/params", "missing required key");
    return result;
  }
  auto params = loader.string_list(root["params"], "/params");
  if (!params) return result;
  doc.params = std::move(*params);

  if (root.contains("spaces")) {
    if (!loader.expect_object(root["spaces"], "/spaces")) return result;
    for (const auto& [name, body] : root["spaces"].items()) {
      const std::string path = "/spaces/" + name;
      if (!loader.expect_object(body, path)) return result;
      if (!body.contains("universe") || !body.contains("opens")) {
        loader.fail(Diagnostic::Kind::Syntax, path, "space needs universe and opens");
        return result;
      }
      auto universe = loader.string_list(body["universe"], path + "/universe");
      if (!universe) return result;
      ContextPtr ctx;
      try {
        ctx = Context::make(std::move(*universe), doc.params);
      } catch (const InvalidContext& e) {
        loader.fail(Diagnostic::Kind::Syntax, path + "/universe", e.what());
        return result;
      }
      if (!body["opens"].is_array()) {
        loader.fail(Diagnostic::Kind::Syntax, path + "/opens", "expected an array");
        return result;
      }
      std::vector<SoftSet> opens;
      for (std::size_t i = 0; i < body["opens"].size(); ++i) {
        auto open = loader.soft_set_value(body["opens"][i], ctx,
                                          path + "/opens/" + std::to_string(i));
        if (!open) return result;
        opens.push_back(std::move(*open));
      }
      ValidationReport report = validate_axioms(ctx, opens);
      if (!report.valid()) {
        loader.fail(Diagnostic::Kind::AxiomViolation, path + "/opens", report.to_string());
        return result;
      }
      doc.spaces.push_back({name, SoftSpace::trusted(ctx, std::move(opens))});
    }
  }

  if (root.contains("soft_sets")) {
    if (!loader.expect_object(root["soft_sets"], "/soft_sets")) return result;
    for (const auto& [name, body] : root["soft_sets"].items()) {
      const std::string path = "/soft_sets/" + name;
      if (!loader.expect_object(body, path)) return result;
      if (!body.contains("space") || !body["space"].is_string() || !body.contains("set")) {
        loader.fail(Diagnostic::Kind::Syntax, path, "soft set needs space and set");
        return result;
      }
      const std::string space_name = body["space"].get<std::string>();
      const NamedSpace* space = doc.find_space(space_name);
      if (!space) {
        loader.fail(Diagnostic::Kind::UnknownReference, path + "/space",
                    "unknown space \"" + space_name + "\"");
        return result;
      }
      auto value = loader.soft_set_value(body["set"], space->space.context(), path + "/set");
      if (!value) return result;
      doc.soft_sets.push_back({name, space_name, std::move(*value)});
    }
  }

  if (root.contains("mappings")) {
    if (!loader.expect_object(root["mappings"], "/mappings")) return result;
    for (const auto& [name, body] : root["mappings"].items()) {
      const std::string path = "/mappings/" + name;
      if (!loader.expect_object(body, path)) return result;
      if (!body.contains("from") || !body["from"].is_string() || !body.contains("to") ||
          !body["to"].is_string() || !body.contains("point_map") ||
          !body["point_map"].is_object()) {
        loader.fail(Diagnostic::Kind::Syntax, path,
                    "mapping needs from, to and point_map");
        return result;
      }
      const NamedSpace* from = doc.find_space(body["from"].get<std::string>());
      const NamedSpace* to = doc.find_space(body["to"].get<std::string>());
      if (!from || !to) {
        loader.fail(Diagnostic::Kind::UnknownReference, path,
                    std::string("unknown space \"") +
                        (!from ? body["from"] : body["to"]).get<std::string>() + "\"");
        return result;
      }
      std::map<std::string, std::string> points;
      for (const auto& [k, v] : body["point_map"].items()) {
        if (!v.is_string()) {
          loader.fail(Diagnostic::Kind::Syntax, path + "/point_map/" + k,
                      "expected a string");
          return result;
        }
        points[k] = v.get<std::string>();
      }
      std::map<std::string, std::string> param_map;
      if (body.contains("param_map")) {
        if (!body["param_map"].is_object()) {
          loader.fail(Diagnostic::Kind::Syntax, path + "/param_map", "expected an object");
          return result;
        }
        for (const auto& [k, v] : body["param_map"].items()) {
          if (!v.is_string()) {
            loader.fail(Diagnostic::Kind::Syntax, path + "/param_map/" + k,
                        "expected a string");
            return result;
          }
          param_map[k] = v.get<std::string>();
        }
      }
      try {
        SoftMapping value = SoftMapping::from_names(from->space.context(),
                                                    to->space.context(), points, param_map);
        doc.mappings.push_back({name, from->name, to->name, std::move(value)});
      } catch (const UnknownElement& e) {
        loader.fail(Diagnostic::Kind::UnknownReference, path,
                    "unknown element \"" + e.identifier + "\"");
        return result;
      } catch (const UnknownParameter& e) {
        loader.fail(Diagnostic::Kind::UnknownReference, path,
                    "unknown parameter \"" + e.identifier + "\"");
        return result;
      } catch (const Error& e) {
        loader.fail(Diagnostic::Kind::Syntax, path, e.what());
        return result;
      }
    }
  }

  if (!result.diagnostics.empty()) return result;
  result.document = std::move(doc);
  return result;
}

namespace {

json soft_set_json(const SoftSet& value) {
  const ContextPtr& ctx = value.context();
  json out = json::object();
  for (std::size_t p = 0; p < ctx->param_count(); ++p) {
    json elems = json::array();
    for (std::size_t e = 0; e < ctx->universe_size(); ++e)
      if (value.contains(e, p)) elems.push_back(ctx->element_name(e));
    if (!elems.empty()) out[ctx->param_name(p)] = std::move(elems);
  }
  return out;
}

}  // namespace

std::string emit_document(const StructureDocument& doc) {
  json root;
  root["params"] = doc.params;

  json spaces = json::object();
  for (const auto& entry : doc.spaces) {
    json body;
    body["universe"] = entry.space.context()->universe();
    json opens = json::array();
    for (const auto& open : entry.space.opens()) opens.push_back(soft_set_json(open));
    body["opens"] = std::move(opens);
    spaces[entry.name] = std::move(body);
  }
  root["spaces"] = std::move(spaces);

  if (!doc.soft_sets.empty()) {
    json sets = json::object();
    for (const auto& entry : doc.soft_sets)
      sets[entry.name] = {{"space", entry.space}, {"set", soft_set_json(entry.value)}};
    root["soft_sets"] = std::move(sets);
  }

  if (!doc.mappings.empty()) {
    json maps = json::object();
    for (const auto& entry : doc.mappings) {
      json body;
      body["from"] = entry.from;
      body["to"] = entry.to;
      json points = json::object();
      const auto& src = entry.value.source();
      const auto& tgt = entry.value.target();
      for (std::size_t i = 0; i < src->universe_size(); ++i)
        points[src->element_name(i)] = tgt->element_name(entry.value.point(i));
      body["point_map"] = std::move(points);
      if (!entry.value.identity_params()) {
        json params = json::object();
        for (std::size_t i = 0; i < src->param_count(); ++i)
          params[src->param_name(i)] = tgt->param_name(entry.value.param(i));
        body["param_map"] = std::move(params);
      }
      maps[entry.name] = std::move(body);
    }
    root["mappings"] = std::move(maps);
  }

  return root.dump(2) + "\n";
}

std::string soft_set_literal(const SoftSet& value) { return soft_set_json(value).dump(); }

}  // namespace softtop

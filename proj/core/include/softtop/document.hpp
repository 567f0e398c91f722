#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/mapping.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// Declarative structure files: a strict JSON schema holding one shared
// parameter list, named spaces (universe + opens), named soft sets bound to a
// space, and named mappings between spaces. Example:
//
//   {
//     "params": ["e1", "e2"],
//     "spaces": {
//       "A": {"universe": ["a", "b"],
//              "opens": [{}, {"e1": ["a", "b"], "e2": ["a", "b"]}]}
//     },
//     "soft_sets": {"F": {"space": "A", "set": {"e1": ["a"]}}},
//     "mappings": {"f": {"from": "A", "to": "A", "point_map": {"a": "b", "b": "a"}}}
//   }
//
// Soft set literals map parameter names to element arrays; omitted parameters
// mean the empty slice. The null and absolute sets must be listed explicitly
// in opens; loading validates every space against the topology axioms.

struct Diagnostic {
  enum class Kind { Syntax, UnknownReference, AxiomViolation };
  Kind kind = Kind::Syntax;
  std::string where;  // "line L, column C" or a JSON pointer-ish path
  std::string message;

  std::string render() const;
};

struct NamedSpace {
  std::string name;
  SoftSpace space;
  bool operator==(const NamedSpace&) const = default;
};

struct NamedSoftSet {
  std::string name;
  std::string space;
  SoftSet value;
  bool operator==(const NamedSoftSet&) const = default;
};

struct NamedMapping {
  std::string name;
  std::string from;
  std::string to;
  SoftMapping value;
  bool operator==(const NamedMapping&) const = default;
};

struct StructureDocument {
  std::vector<std::string> params;
  std::vector<NamedSpace> spaces;
  std::vector<NamedSoftSet> soft_sets;
  std::vector<NamedMapping> mappings;

  const NamedSpace* find_space(std::string_view name) const;
  const NamedSoftSet* find_soft_set(std::string_view name) const;
  const NamedMapping* find_mapping(std::string_view name) const;

  bool operator==(const StructureDocument&) const = default;
};

struct ParseResult {
  std::optional<StructureDocument> document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return document.has_value(); }
};

ParseResult parse_document(std::string_view text);
std::string emit_document(const StructureDocument& doc);

// One soft set as a literal JSON object (empty slices omitted).
std::string soft_set_literal(const SoftSet& value);

}  // namespace softtop

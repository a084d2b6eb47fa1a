#pragma once

#include "kas3/config.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kas3 {

using Json = nlohmann::ordered_json;

/// A configuration file: the complex plus its optional annotations.
///
///   {"vertices":[...], "edges":[{"id":..,"ends":[u,v]}...],
///    "triangles":[{"id":..,"edges":[e1,e2,e3]}...],
///    "weights":{id:int}, "edge_classes":{id:1|2|3},
///    "vertex_classes":{id:1|2|3}, "ends":[[e1,e2,e3],...]}
///
/// Only the first three keys are required; all ids are strings.
struct ConfigDocument {
  TriangularConfiguration config;
  std::optional<Weighting> weights;
  std::optional<EdgeTripartition> edge_classes;
  std::optional<VertexTripartition> vertex_classes;
  std::optional<std::vector<std::array<Id, 3>>> ends;
};

/// Throws SchemaError on any shape violation.
ConfigDocument config_document_from_json(const Json& j);
ConfigDocument parse_config_document(const std::string& text);

/// Canonical form: keys in the order above, every id list sorted.
Json to_json(const ConfigDocument& doc);
Json to_json(const TriangularConfiguration& config);
std::string dump_canonical(const Json& j);

/// Reads a whole file; throws SchemaError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace kas3

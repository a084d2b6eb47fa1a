#include "kas3/config_json.hpp"

#include "kas3/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace kas3 {

namespace {

const std::set<std::string> kKnownKeys{"vertices", "edges",          "triangles", "weights",
                                       "edge_classes", "vertex_classes", "ends"};

Id id_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": ids must be strings");
  return j.get<std::string>();
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing \"" + key + "\"");
  return *it;
}

std::map<Id, int> class_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  std::map<Id, int> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_integer())
      throw SchemaError(where + "[\"" + it.key() + "\"] must be 1, 2 or 3");
    const auto c = it.value().get<std::int64_t>();
    if (c < 1 || c > 3) throw SchemaError(where + "[\"" + it.key() + "\"] must be 1, 2 or 3");
    out[it.key()] = static_cast<int>(c);
  }
  return out;
}

}  // namespace

ConfigDocument config_document_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("configuration must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!kKnownKeys.count(it.key())) throw SchemaError("unknown configuration key \"" + it.key() + "\"");

  const Json& jv = field(j, "vertices", "configuration");
  if (!jv.is_array()) throw SchemaError("\"vertices\" must be an array");
  std::vector<Id> vertices;
  for (const auto& v : jv) vertices.push_back(id_of(v, "vertices"));

  const Json& je = field(j, "edges", "configuration");
  if (!je.is_array()) throw SchemaError("\"edges\" must be an array");
  std::vector<EdgeSpec> edges;
  for (const auto& e : je) {
    if (!e.is_object()) throw SchemaError("edge entries must be objects");
    EdgeSpec spec{id_of(field(e, "id", "edge"), "edge"), std::nullopt};
    for (auto it = e.begin(); it != e.end(); ++it)
      if (it.key() != "id" && it.key() != "ends")
        throw SchemaError("unknown edge key \"" + it.key() + "\"");
    if (auto ends = e.find("ends"); ends != e.end()) {
      if (!ends->is_array() || ends->size() != 2)
        throw SchemaError("edge '" + spec.id + "': \"ends\" must hold two vertex ids");
      spec.ends = std::make_pair(id_of((*ends)[0], "ends"), id_of((*ends)[1], "ends"));
    }
    edges.push_back(std::move(spec));
  }

  const Json& jt = field(j, "triangles", "configuration");
  if (!jt.is_array()) throw SchemaError("\"triangles\" must be an array");
  std::vector<TriangleSpec> triangles;
  for (const auto& t : jt) {
    if (!t.is_object()) throw SchemaError("triangle entries must be objects");
    for (auto it = t.begin(); it != t.end(); ++it)
      if (it.key() != "id" && it.key() != "edges")
        throw SchemaError("unknown triangle key \"" + it.key() + "\"");
    TriangleSpec spec{id_of(field(t, "id", "triangle"), "triangle"), {}};
    const Json& te = field(t, "edges", "triangle '" + spec.id + "'");
    if (!te.is_array() || te.size() != 3)
      throw SchemaError("triangle '" + spec.id + "': \"edges\" must hold three edge ids");
    for (int k = 0; k < 3; ++k) spec.edges[k] = id_of(te[k], "triangle edges");
    triangles.push_back(std::move(spec));
  }

  ConfigDocument doc{TriangularConfiguration(std::move(vertices), std::move(edges),
                                             std::move(triangles)),
                     std::nullopt, std::nullopt, std::nullopt, std::nullopt};

  if (auto jw = j.find("weights"); jw != j.end()) {
    if (!jw->is_object()) throw SchemaError("\"weights\" must be an object");
    Weighting w;
    for (auto it = jw->begin(); it != jw->end(); ++it) {
      if (!it.value().is_number_integer())
        throw SchemaError("weight of '" + it.key() + "' must be an integer");
      if (!doc.config.triangle_index(it.key()))
        throw SchemaError("weight given for unknown triangle '" + it.key() + "'");
      w.weights[it.key()] = it.value().get<std::int64_t>();
    }
    doc.weights = std::move(w);
  }
  if (auto jc = j.find("edge_classes"); jc != j.end()) {
    EdgeTripartition parts{class_map(*jc, "edge_classes")};
    for (const auto& [id, c] : parts.classes)
      if (!doc.config.edge_index(id)) throw SchemaError("edge_classes names unknown edge '" + id + "'");
    doc.edge_classes = std::move(parts);
  }
  if (auto jc = j.find("vertex_classes"); jc != j.end()) {
    VertexTripartition parts{class_map(*jc, "vertex_classes")};
    for (const auto& [id, c] : parts.classes)
      if (!doc.config.vertex_index(id))
        throw SchemaError("vertex_classes names unknown vertex '" + id + "'");
    doc.vertex_classes = std::move(parts);
  }
  if (auto jn = j.find("ends"); jn != j.end()) {
    if (!jn->is_array()) throw SchemaError("\"ends\" must be an array of edge triples");
    std::vector<std::array<Id, 3>> ends;
    for (const auto& triple : *jn) {
      if (!triple.is_array() || triple.size() != 3)
        throw SchemaError("each end must be an array of three edge ids");
      std::array<Id, 3> t{id_of(triple[0], "ends"), id_of(triple[1], "ends"),
                          id_of(triple[2], "ends")};
      for (const auto& e : t)
        if (!doc.config.edge_index(e)) throw SchemaError("end names unknown edge '" + e + "'");
      ends.push_back(t);
    }
    doc.ends = std::move(ends);
  }
  return doc;
}

ConfigDocument parse_config_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return config_document_from_json(j);
}

Json to_json(const TriangularConfiguration& config) {
  Json j = Json::object();
  j["vertices"] = Json::array();
  for (const auto& v : config.vertices()) j["vertices"].push_back(v);
  j["edges"] = Json::array();
  for (const auto& e : config.edges()) {
    Json je = Json::object();
    je["id"] = e.id;
    if (e.ends) je["ends"] = Json::array({e.ends->first, e.ends->second});
    j["edges"].push_back(std::move(je));
  }
  j["triangles"] = Json::array();
  for (const auto& t : config.triangles()) {
    Json jt = Json::object();
    jt["id"] = t.id;
    jt["edges"] = Json::array({t.edges[0], t.edges[1], t.edges[2]});
    j["triangles"].push_back(std::move(jt));
  }
  return j;
}

Json to_json(const ConfigDocument& doc) {
  Json j = to_json(doc.config);
  if (doc.weights) {
    Json w = Json::object();
    for (const auto& [id, v] : doc.weights->weights) w[id] = v;
    j["weights"] = std::move(w);
  }
  if (doc.edge_classes) {
    Json c = Json::object();
    for (const auto& [id, v] : doc.edge_classes->classes) c[id] = v;
    j["edge_classes"] = std::move(c);
  }
  if (doc.vertex_classes) {
    Json c = Json::object();
    for (const auto& [id, v] : doc.vertex_classes->classes) c[id] = v;
    j["vertex_classes"] = std::move(c);
  }
  if (doc.ends) {
    Json ends = Json::array();
    for (auto t : *doc.ends) {
      std::sort(t.begin(), t.end());
      ends.push_back(Json::array({t[0], t[1], t[2]}));
    }
    j["ends"] = std::move(ends);
  }
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace kas3

#include "hf/json_io.hpp"

#include <cstdint>
#include <string>
#include <utility>

#include "json.hpp"

#include "hf/field_io.hpp"

namespace hf {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  raise(errc::parse_error, where + ": " + what);
}

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) raise(errc::parse_error, "malformed JSON");
  return doc;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a string");
  return v.get<std::string>();
}

std::int64_t get_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<std::int64_t>();
}

json graph_json(const GraphData& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(json{{"genus", v.genus}, {"id", v.id}});
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.a, e.b}));
  json legs = json::array();
  for (const auto& l : g.legs) legs.push_back(json{{"label", l.label}, {"vertex", l.vertex}});
  return json{{"edges", edges}, {"legs", legs}, {"vertices", vertices}};
}

GraphData graph_from(const json& doc, const std::string& where) {
  GraphData g;
  const json& vertices = member(doc, "vertices", where);
  if (!vertices.is_array()) bad(where + "/vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = where + "/vertices/" + std::to_string(i);
    GraphVertex v;
    v.id = get_string(member(vertices[i], "id", at), at + "/id");
    v.genus = static_cast<int>(get_int(member(vertices[i], "genus", at), at + "/genus"));
    g.vertices.push_back(std::move(v));
  }
  const json& edges = member(doc, "edges", where);
  if (!edges.is_array()) bad(where + "/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + "/edges/" + std::to_string(i);
    if (!edges[i].is_array() || edges[i].size() != 2) bad(at, "expected a pair of vertex ids");
    g.edges.push_back({get_string(edges[i][0], at + "/0"), get_string(edges[i][1], at + "/1")});
  }
  const json& legs = member(doc, "legs", where);
  if (!legs.is_array()) bad(where + "/legs", "expected an array");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const std::string at = where + "/legs/" + std::to_string(i);
    GraphLeg l;
    l.label = get_string(member(legs[i], "label", at), at + "/label");
    l.vertex = get_string(member(legs[i], "vertex", at), at + "/vertex");
    g.legs.push_back(std::move(l));
  }
  return g;
}

json behavior_json(const Behavior& b) {
  switch (b.kind) {
    case BehaviorKind::Contracted:
      return json{{"kind", "contracted"}};
    case BehaviorKind::Separable:
      return json{{"kind", "separable"}};
    case BehaviorKind::Inseparable:
      break;
  }
  return json{{"degree", b.insep_degree}, {"kind", "inseparable"}};
}

Behavior behavior_from(const json& v, const std::string& where) {
  const std::string kind = get_string(member(v, "kind", where), where + "/kind");
  if (kind == "contracted") return Behavior::contracted();
  if (kind == "separable") return Behavior::separable();
  if (kind == "inseparable") {
    return Behavior::inseparable(
        static_cast<int>(get_int(member(v, "degree", where), where + "/degree")));
  }
  bad(where + "/kind", "expected contracted, separable, or inseparable");
}

void string_map_from(const json& v, const std::string& where,
                     std::map<std::string, std::string>& out) {
  if (!v.is_object()) bad(where, "expected an object");
  for (auto it = v.begin(); it != v.end(); ++it) {
    out[it.key()] = get_string(it.value(), where + "/" + it.key());
  }
}

json map_json(const StableMapData& m) {
  json vertex_map = json::object();
  for (const auto& [from, to] : m.vertex_map) vertex_map[from] = to;
  json leg_map = json::object();
  for (const auto& [from, to] : m.leg_map) leg_map[from] = to;
  json degree = json::object();
  for (const auto& [id, d] : m.degree) degree[id] = d;
  json behavior = json::object();
  for (const auto& [id, b] : m.behavior) behavior[id] = behavior_json(b);
  json edge_map = json::array();
  for (const auto& image : m.edge_map) {
    if (image.kind == EdgeImage::ToEdge) {
      edge_map.push_back(json{{"index", static_cast<std::int64_t>(image.edge_index)},
                              {"to", "edge"}});
    } else {
      edge_map.push_back(json{{"id", image.vertex_id}, {"to", "vertex"}});
    }
  }
  json out{{"behavior", behavior},       {"degree", degree},
           {"edge_map", edge_map},       {"leg_map", leg_map},
           {"source", graph_json(m.source)}, {"target", graph_json(m.target)},
           {"total_degree", m.total_degree}, {"vertex_map", vertex_map}};
  if (m.genus) out["genus"] = *m.genus;
  return out;
}

StableMapData map_from(const json& doc, const std::string& where) {
  StableMapData m;
  m.source = graph_from(member(doc, "source", where), where + "/source");
  m.target = graph_from(member(doc, "target", where), where + "/target");
  string_map_from(member(doc, "vertex_map", where), where + "/vertex_map", m.vertex_map);
  string_map_from(member(doc, "leg_map", where), where + "/leg_map", m.leg_map);

  const json& edge_map = member(doc, "edge_map", where);
  if (!edge_map.is_array()) bad(where + "/edge_map", "expected an array");
  for (std::size_t i = 0; i < edge_map.size(); ++i) {
    const std::string at = where + "/edge_map/" + std::to_string(i);
    const std::string to = get_string(member(edge_map[i], "to", at), at + "/to");
    if (to == "edge") {
      const std::int64_t index = get_int(member(edge_map[i], "index", at), at + "/index");
      if (index < 0) bad(at + "/index", "expected a nonnegative index");
      m.edge_map.push_back(EdgeImage::to_edge(static_cast<std::size_t>(index)));
    } else if (to == "vertex") {
      m.edge_map.push_back(EdgeImage::to_vertex(get_string(member(edge_map[i], "id", at), at + "/id")));
    } else {
      bad(at + "/to", "expected edge or vertex");
    }
  }

  const json& degree = member(doc, "degree", where);
  if (!degree.is_object()) bad(where + "/degree", "expected an object");
  for (auto it = degree.begin(); it != degree.end(); ++it) {
    m.degree[it.key()] = static_cast<int>(get_int(it.value(), where + "/degree/" + it.key()));
  }

  const json& behavior = member(doc, "behavior", where);
  if (!behavior.is_object()) bad(where + "/behavior", "expected an object");
  for (auto it = behavior.begin(); it != behavior.end(); ++it) {
    m.behavior[it.key()] = behavior_from(it.value(), where + "/behavior/" + it.key());
  }

  m.total_degree = static_cast<int>(get_int(member(doc, "total_degree", where), where + "/total_degree"));
  if (doc.contains("genus")) {
    m.genus = static_cast<int>(get_int(doc["genus"], where + "/genus"));
  }
  return m;
}

json field_json(const Field& field) {
  return json{{"k", field.extension_degree()},
              {"modulus", field.modulus()},
              {"p", field.characteristic()}};
}

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string graph_to_json(const GraphData& graph) { return finish(graph_json(graph)); }

GraphData graph_from_json(const std::string& text) {
  return graph_from(parse_text(text), "graph");
}

std::string map_to_json(const StableMapData& map) { return finish(map_json(map)); }

StableMapData map_from_json(const std::string& text) {
  return map_from(parse_text(text), "map");
}

std::string field_to_json(const Field& field) { return finish(field_json(field)); }

std::string classification_to_json(const ClassificationResult& result) {
  const Certificates& c = result.certificates;
  json components = json::array();
  for (ComponentId id : result.components) components.push_back(component_name(id));
  json doc{
      {"case", case_name(result.case_id)},
      {"certificates",
       json{{"degree_check", c.degree_check},
            {"finiteness_attributes",
             json{{"has_inseparable_part", c.finiteness_attributes.has_inseparable_part},
                  {"is_finite", c.finiteness_attributes.is_finite}}},
            {"genus_check", c.genus_check},
            {"stability_check", c.stability_check}}},
      {"components", components},
      {"field", field_json(*result.point.field())},
      {"j_s", format_p1(result.point.j_s)},
      {"lambda_s", format_p1(result.point.lambda_s)},
      {"map", map_json(result.map_type.data())},
      {"schema", "hf-1"},
  };
  if (result.attaching_point) {
    doc["attaching_point"] = json{{"x", format_elem(result.attaching_point->first)},
                                  {"y", format_elem(result.attaching_point->second)}};
  }
  return finish(doc);
}

DocumentReport check_json_document(const std::string& text) {
  json doc = parse_text(text);
  for (int hops = 0; doc.is_object() && doc.contains("map") && !doc.contains("source") &&
                     !doc.contains("vertices");
       ++hops) {
    if (hops > 4) raise(errc::parse_error, "document nests \"map\" wrappers too deeply");
    doc = doc["map"];
  }
  DocumentReport report;
  if (doc.is_object() && doc.contains("source")) {
    report.violations = StableMapType::check(map_from(doc, "map"));
  } else if (doc.is_object() && doc.contains("vertices")) {
    report.violations = DualGraph::check(graph_from(doc, "graph"));
  } else {
    raise(errc::parse_error,
          "document is neither a dual graph, a stable map, nor an object with a \"map\" field");
  }
  report.valid = report.violations.empty();
  return report;
}

std::string document_report_to_json(const DocumentReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(json{{"code", errc_name(v.code)},
                              {"element", v.element},
                              {"message", v.message}});
  }
  return finish(json{{"schema", "hf-1"}, {"valid", report.valid}, {"violations", violations}});
}

}  // namespace hf

#include "hf/json_io.hpp"

#include <functional>
#include <string>
#include <vector>

#include "doctest.h"

#include "hf/classifier.hpp"
#include "hf/field_io.hpp"
#include "hf/schema_check.hpp"

using namespace hf;

namespace {

GraphData two_component_graph() {
  GraphData g;
  g.vertices = {{"C0", 0}, {"C1", 1}};
  g.edges = {{"C0", "C1"}};
  g.legs = {{"0", "C0"}, {"1", "C0"}, {"inf", "C0"}, {"lambda", "C0"}};
  return g;
}

ClassificationResult classify_at(const P1Point& lambda, const P1Point& j) {
  return classify(H24Point(lambda, j));
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a raised Error");
  return errc::parse_error;
}

}  // namespace

TEST_CASE("graph serialization round-trips and is canonical") {
  const GraphData g = two_component_graph();
  const std::string text = graph_to_json(g);

  CHECK(text ==
        "{\n"
        "  \"edges\": [\n"
        "    [\n"
        "      \"C0\",\n"
        "      \"C1\"\n"
        "    ]\n"
        "  ],\n"
        "  \"legs\": [\n"
        "    {\n"
        "      \"label\": \"0\",\n"
        "      \"vertex\": \"C0\"\n"
        "    },\n"
        "    {\n"
        "      \"label\": \"1\",\n"
        "      \"vertex\": \"C0\"\n"
        "    },\n"
        "    {\n"
        "      \"label\": \"inf\",\n"
        "      \"vertex\": \"C0\"\n"
        "    },\n"
        "    {\n"
        "      \"label\": \"lambda\",\n"
        "      \"vertex\": \"C0\"\n"
        "    }\n"
        "  ],\n"
        "  \"vertices\": [\n"
        "    {\n"
        "      \"genus\": 0,\n"
        "      \"id\": \"C0\"\n"
        "    },\n"
        "    {\n"
        "      \"genus\": 1,\n"
        "      \"id\": \"C1\"\n"
        "    }\n"
        "  ]\n"
        "}\n");

  const GraphData back = graph_from_json(text);
  CHECK(graph_to_json(back) == text);
  CHECK(back.vertices.size() == 2);
  CHECK(back.vertices[1].genus == 1);
  CHECK(back.edges.size() == 1);
  CHECK(back.edges[0].a == "C0");
  CHECK(back.legs.size() == 4);
  CHECK(DualGraph::check(back).empty());
}

TEST_CASE("graph reader ignores unknown keys and rejects bad shapes") {
  CHECK(graph_from_json(
            R"({"vertices":[{"id":"A","genus":0,"color":"red"}],"edges":[],"legs":[],"note":1})")
            .vertices.size() == 1);

  CHECK(code_of([] { graph_from_json("not json"); }) == errc::parse_error);
  CHECK(code_of([] { graph_from_json(R"({"edges":[],"legs":[]})"); }) == errc::parse_error);
  CHECK(code_of([] { graph_from_json(R"({"vertices":{},"edges":[],"legs":[]})"); }) ==
        errc::parse_error);
  CHECK(code_of([] {
          graph_from_json(R"({"vertices":[],"edges":[["A","B","C"]],"legs":[]})");
        }) == errc::parse_error);
  CHECK(code_of([] {
          graph_from_json(R"({"vertices":[{"id":"A","genus":"x"}],"edges":[],"legs":[]})");
        }) == errc::parse_error);
}

TEST_CASE("stable map serialization round-trips through every case shape") {
  const FieldPtr f4 = Field::make(2, 2);
  const P1Point zero = P1Point::finite(f4->zero());
  const P1Point one = P1Point::finite(f4->one());
  const P1Point inf = P1Point::infinity(f4);
  const P1Point t = P1Point::finite(f4->element_at(2));

  const std::vector<std::pair<P1Point, P1Point>> points = {
      {t, zero}, {zero, one}, {zero, inf}, {zero, zero}};
  for (const auto& [lambda, j] : points) {
    const ClassificationResult result = classify_at(lambda, j);
    const StableMapData& data = result.map_type.data();
    const std::string text = map_to_json(data);

    const StableMapData back = map_from_json(text);
    CHECK(map_to_json(back) == text);
    CHECK(StableMapType::check(back).empty());
    CHECK(equivalent_types(result.map_type, StableMapType::validate(back)));
    CHECK(back.total_degree == 2);
    REQUIRE(back.genus.has_value());
    CHECK(*back.genus == 1);
    CHECK(back.edge_map.size() == data.edge_map.size());
    for (std::size_t i = 0; i < back.edge_map.size(); ++i) {
      CHECK(back.edge_map[i] == data.edge_map[i]);
    }
    CHECK(back.behavior == data.behavior);
    CHECK(back.degree == data.degree);
    CHECK(back.vertex_map == data.vertex_map);
    CHECK(back.leg_map == data.leg_map);
  }
}

TEST_CASE("stable map reader rejects malformed pieces") {
  const FieldPtr f2 = Field::make(2, 1);
  const ClassificationResult result =
      classify_at(P1Point::finite(f2->zero()), P1Point::finite(f2->one()));
  const std::string good = map_to_json(result.map_type.data());

  auto corrupt = [&](const std::string& from, const std::string& to) {
    std::string text = good;
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), to);
    return text;
  };

  CHECK(code_of([&] { map_from_json(corrupt("\"kind\": \"inseparable\"", "\"kind\": \"odd\"")); }) ==
        errc::parse_error);
  CHECK(code_of([&] { map_from_json(corrupt("\"to\": \"edge\"", "\"to\": \"leg\"")); }) ==
        errc::parse_error);
  CHECK(code_of([&] { map_from_json(corrupt("\"index\": 0", "\"index\": -1")); }) ==
        errc::parse_error);
  CHECK(code_of([&] { map_from_json(corrupt("\"total_degree\": 2", "\"total_degree\": \"2\"")); }) ==
        errc::parse_error);
}

TEST_CASE("field echo lists characteristic, degree, and modulus") {
  CHECK(field_to_json(*Field::make(2, 2)) ==
        "{\n"
        "  \"k\": 2,\n"
        "  \"modulus\": [\n"
        "    1,\n"
        "    1,\n"
        "    1\n"
        "  ],\n"
        "  \"p\": 2\n"
        "}\n");
  CHECK(field_to_json(*Field::make(5, 1)) ==
        "{\n"
        "  \"k\": 1,\n"
        "  \"modulus\": [],\n"
        "  \"p\": 5\n"
        "}\n");
  CHECK(field_to_json(*Field::rationals()) ==
        "{\n"
        "  \"k\": 1,\n"
        "  \"modulus\": [],\n"
        "  \"p\": 0\n"
        "}\n");
}

TEST_CASE("classification serialization carries the full record") {
  const FieldPtr f4 = Field::make(2, 2);
  const ClassificationResult result =
      classify_at(P1Point::finite(f4->element_at(2)), P1Point::finite(f4->zero()));
  const std::string text = classification_to_json(result);

  CHECK(text.find("\"schema\": \"hf-1\"") != std::string::npos);
  CHECK(text.find("\"case\": \"Case1\"") != std::string::npos);
  CHECK(text.find("\"lambda_s\": \"t\"") != std::string::npos);
  CHECK(text.find("\"attaching_point\"") != std::string::npos);
  CHECK(text.find("\"x\": \"t+1\"") != std::string::npos);
  CHECK(classification_to_json(result) == text);

  const ClassificationResult no_attach =
      classify_at(P1Point::finite(f4->zero()), P1Point::finite(f4->one()));
  CHECK(classification_to_json(no_attach).find("attaching_point") == std::string::npos);
}

TEST_CASE("document checker dispatches on shape and reports violations") {
  const GraphData g = two_component_graph();
  const DocumentReport ok = check_json_document(graph_to_json(g));
  CHECK(ok.valid);
  CHECK(ok.violations.empty());

  GraphData broken = g;
  broken.edges.push_back({"C0", "ghost"});
  const DocumentReport bad_report = check_json_document(graph_to_json(broken));
  CHECK_FALSE(bad_report.valid);
  REQUIRE_FALSE(bad_report.violations.empty());
  CHECK(bad_report.violations.front().code == errc::dangling_reference);

  const FieldPtr f2 = Field::make(2, 1);
  const ClassificationResult result =
      classify_at(P1Point::finite(f2->zero()), P1Point::infinity(f2));
  CHECK(check_json_document(map_to_json(result.map_type.data())).valid);
  CHECK(check_json_document(classification_to_json(result)).valid);

  CHECK(code_of([] { check_json_document("{\"answer\": 42}"); }) == errc::parse_error);
  CHECK(code_of([] { check_json_document("[1, 2]"); }) == errc::parse_error);
  std::string nested = R"({"vertices":[],"edges":[],"legs":[]})";
  for (int i = 0; i < 6; ++i) nested = R"({"map":)" + nested + "}";
  CHECK(code_of([&] { check_json_document(nested); }) == errc::parse_error);
}

TEST_CASE("report serialization prints the violation list") {
  DocumentReport report;
  report.valid = false;
  report.violations.push_back({errc::disconnected, "C3", "unreachable from C0"});
  CHECK(document_report_to_json(report) ==
        "{\n"
        "  \"schema\": \"hf-1\",\n"
        "  \"valid\": false,\n"
        "  \"violations\": [\n"
        "    {\n"
        "      \"code\": \"Disconnected\",\n"
        "      \"element\": \"C3\",\n"
        "      \"message\": \"unreachable from C0\"\n"
        "    }\n"
        "  ]\n"
        "}\n");

  DocumentReport clean;
  clean.valid = true;
  CHECK(document_report_to_json(clean) ==
        "{\n"
        "  \"schema\": \"hf-1\",\n"
        "  \"valid\": true,\n"
        "  \"violations\": []\n"
        "}\n");
}

TEST_CASE("schema subset validator enforces each keyword") {
  const std::string schema = R"({
    "definitions": {
      "name": {"type": "string"}
    },
    "type": "object",
    "properties": {
      "id": {"$ref": "#/definitions/name"},
      "count": {"type": "integer", "minimum": 0},
      "tag": {"enum": ["a", "b"]},
      "items": {"type": "array", "items": {"type": "string"}, "minItems": 1, "maxItems": 2},
      "extra": {"type": ["integer", "null"]}
    },
    "required": ["id", "count"],
    "additionalProperties": false
  })";

  CHECK(schema_violations(schema, R"({"id":"x","count":3,"tag":"a","items":["y"],"extra":null})")
            .empty());

  CHECK(schema_violations(schema, R"({"id":"x"})").size() == 1);           // missing count
  CHECK(schema_violations(schema, R"({"id":1,"count":3})").size() == 1);   // ref type
  CHECK(schema_violations(schema, R"({"id":"x","count":-1})").size() == 1);
  CHECK(schema_violations(schema, R"({"id":"x","count":3,"tag":"c"})").size() == 1);
  CHECK(schema_violations(schema, R"({"id":"x","count":3,"items":[]})").size() == 1);
  CHECK(schema_violations(schema, R"({"id":"x","count":3,"items":["a","b","c"]})").size() == 1);
  CHECK(schema_violations(schema, R"({"id":"x","count":3,"items":[1]})").size() == 1);
  CHECK(schema_violations(schema, R"({"id":"x","count":3,"rogue":true})").size() == 1);
  CHECK(schema_violations(schema, R"({"id":"x","count":3,"extra":"s"})").size() == 1);
  CHECK(schema_violations(schema, R"({"id":"x","count":1.5})").size() == 1);

  const std::string map_schema =
      R"({"type":"object","additionalProperties":{"type":"integer"}})";
  CHECK(schema_violations(map_schema, R"({"a":1,"b":2})").empty());
  CHECK(schema_violations(map_schema, R"({"a":"x"})").size() == 1);
}

TEST_CASE("schema validator refuses what it cannot check") {
  CHECK_THROWS_AS(schema_violations(R"({"oneOf":[{"type":"string"}]})", "3"), Error);
  CHECK_THROWS_AS(schema_violations(R"({"$ref":"#/nope"})", "3"), Error);
  CHECK_THROWS_AS(schema_violations(R"({"$ref":"#/definitions/missing"})", "3"), Error);
  CHECK_THROWS_AS(schema_violations(R"({"type":"widget"})", "3"), Error);
  CHECK_THROWS_AS(schema_violations("not json", "3"), Error);
  CHECK_THROWS_AS(schema_violations(R"({"type":"string"})", "not json"), Error);
}

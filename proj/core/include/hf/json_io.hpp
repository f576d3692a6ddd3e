#pragma once

#include <string>
#include <vector>

#include "hf/classifier.hpp"
#include "hf/dual_graph.hpp"
#include "hf/errors.hpp"
#include "hf/field.hpp"
#include "hf/stable_map.hpp"

namespace hf {

// JSON text forms of the combinatorial types. Serialization is canonical:
// object keys sorted, two-space indentation, one trailing newline. Equal
// values therefore produce byte-identical text.
//
// Readers accept any JSON with the documented fields, ignore unknown keys,
// and throw parse_error when the text is malformed or a field has the wrong
// shape. They do not check semantic validity; run DualGraph::check or
// StableMapType::check on the result for that.

std::string graph_to_json(const GraphData& graph);
GraphData graph_from_json(const std::string& text);

std::string map_to_json(const StableMapData& map);
StableMapData map_from_json(const std::string& text);

// {"k":2,"modulus":[1,1,1],"p":2}; modulus low-to-high, empty for prime
// fields and the rationals (p = 0, k = 1).
std::string field_to_json(const Field& field);

// Full classification record: point, case, components, certificates, the
// map itself, and the attaching point when one exists. Carries the
// "schema":"hf-1" marker; this is the classify subcommand's output.
std::string classification_to_json(const ClassificationResult& result);

// Validation outcome for a JSON document holding a dual graph, a stable
// map, or any object carrying one under a "map" key. Malformed JSON, a
// shape that is none of those, or a map whose entries cannot be decoded
// throw parse_error; decodable documents report their semantic violations
// here instead of throwing.
struct DocumentReport {
  bool valid = false;
  std::vector<Violation> violations;
};

DocumentReport check_json_document(const std::string& text);

// {"schema":"hf-1","valid":...,"violations":[{"code","element","message"}]}
std::string document_report_to_json(const DocumentReport& report);

}  // namespace hf

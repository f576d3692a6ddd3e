#pragma once

#include <string>
#include <vector>

namespace hf {

// Validates a JSON document against a JSON Schema written in the subset the
// shipped schemas use: "type" (single name or list), "enum", "properties",
// "required", "additionalProperties" (boolean or schema), "items" (single
// schema), "minItems", "maxItems", "minimum", and local "$ref" into
// "#/definitions/...". Annotation keys ($schema, $id, title, description,
// definitions) are accepted; any other keyword throws parse_error, so a
// schema outside the subset fails loudly instead of half-validating.
//
// Returns one human-readable line per violation, empty when the document
// conforms. Malformed JSON on either side throws parse_error.
std::vector<std::string> schema_violations(const std::string& schema_text,
                                           const std::string& document_text);

}  // namespace hf

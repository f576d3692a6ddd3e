#include "hf/schema_check.hpp"

#include <set>
#include <string>

#include "json.hpp"

#include "hf/errors.hpp"

namespace hf {
namespace {

using nlohmann::json;

const std::set<std::string> kValidationKeys = {
    "type",     "enum",     "properties", "required", "additionalProperties",
    "items",    "minItems", "maxItems",   "minimum",  "$ref",
};
const std::set<std::string> kAnnotationKeys = {"$schema", "$id", "title", "description",
                                               "definitions"};

json parse_or_raise(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) raise(errc::parse_error, std::string("malformed JSON in ") + what);
  return doc;
}

bool matches_type(const json& value, const std::string& name) {
  if (name == "object") return value.is_object();
  if (name == "array") return value.is_array();
  if (name == "string") return value.is_string();
  if (name == "integer") return value.is_number_integer();
  if (name == "number") return value.is_number();
  if (name == "boolean") return value.is_boolean();
  if (name == "null") return value.is_null();
  raise(errc::parse_error, "unknown type name in schema: " + name);
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  std::vector<std::string> run(const json& value) {
    validate(root_, value, "#");
    return std::move(problems_);
  }

 private:
  const json& resolve_ref(const std::string& ref) const {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) {
      raise(errc::parse_error, "unsupported $ref target: " + ref);
    }
    const std::string name = ref.substr(prefix.size());
    auto defs = root_.find("definitions");
    if (defs == root_.end() || !defs->is_object() || !defs->contains(name)) {
      raise(errc::parse_error, "unresolved $ref: " + ref);
    }
    return (*defs)[name];
  }

  void problem(const std::string& path, const std::string& what) {
    problems_.push_back(path + ": " + what);
  }

  void validate(const json& schema, const json& value, const std::string& path) {
    if (!schema.is_object()) raise(errc::parse_error, "schema node is not an object");
    for (auto it = schema.begin(); it != schema.end(); ++it) {
      if (!kValidationKeys.count(it.key()) && !kAnnotationKeys.count(it.key())) {
        raise(errc::parse_error, "unsupported schema keyword: " + it.key());
      }
    }
    if (schema.contains("$ref")) {
      validate(resolve_ref(schema["$ref"].get<std::string>()), value, path);
      return;
    }

    if (schema.contains("type")) {
      const json& type = schema["type"];
      bool ok = false;
      if (type.is_string()) {
        ok = matches_type(value, type.get<std::string>());
      } else if (type.is_array()) {
        for (const json& name : type) ok = ok || matches_type(value, name.get<std::string>());
      } else {
        raise(errc::parse_error, "schema \"type\" must be a name or a list of names");
      }
      if (!ok) {
        problem(path, "expected type " + type.dump() + ", got " + std::string(value.type_name()));
        return;
      }
    }

    if (schema.contains("enum")) {
      bool ok = false;
      for (const json& candidate : schema["enum"]) ok = ok || candidate == value;
      if (!ok) problem(path, "value " + value.dump() + " not in enum " + schema["enum"].dump());
    }

    if (schema.contains("minimum") && value.is_number()) {
      if (value.get<double>() < schema["minimum"].get<double>()) {
        problem(path, "value " + value.dump() + " below minimum " + schema["minimum"].dump());
      }
    }

    if (value.is_object()) {
      if (schema.contains("required")) {
        for (const json& key : schema["required"]) {
          if (!value.contains(key.get<std::string>())) {
            problem(path, "missing required member \"" + key.get<std::string>() + "\"");
          }
        }
      }
      const json* properties = schema.contains("properties") ? &schema["properties"] : nullptr;
      for (auto it = value.begin(); it != value.end(); ++it) {
        const std::string child = path + "/" + it.key();
        if (properties && properties->contains(it.key())) {
          validate((*properties)[it.key()], it.value(), child);
        } else if (schema.contains("additionalProperties")) {
          const json& extra = schema["additionalProperties"];
          if (extra.is_boolean()) {
            if (!extra.get<bool>()) problem(child, "member not allowed here");
          } else {
            validate(extra, it.value(), child);
          }
        }
      }
    }

    if (value.is_array()) {
      if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) {
        problem(path, "fewer than " + schema["minItems"].dump() + " items");
      }
      if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>()) {
        problem(path, "more than " + schema["maxItems"].dump() + " items");
      }
      if (schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          validate(schema["items"], value[i], path + "/" + std::to_string(i));
        }
      }
    }
  }

  const json& root_;
  std::vector<std::string> problems_;
};

}  // namespace

std::vector<std::string> schema_violations(const std::string& schema_text,
                                           const std::string& document_text) {
  json schema = parse_or_raise(schema_text, "schema");
  json document = parse_or_raise(document_text, "document");
  return Validator(schema).run(document);
}

}  // namespace hf

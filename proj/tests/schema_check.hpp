#pragma once

// Minimal structural JSON Schema checker covering the subset the report
// schema uses: type, required, properties, additionalProperties (bool),
// items, enum, oneOf and $ref into #/$defs. Enough to pin the published
// schema to the emitted reports without pulling in a validator dependency.

#include <string>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline const json& deref(const json& schema, const json& root) {
  if (schema.contains("$ref")) {
    std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
    return root.at("$defs").at(ref.substr(prefix.size()));
  }
  return schema;
}

inline bool validate(const json& value, const json& schema_in, const json& root,
                     std::string* why) {
  const json& schema = deref(schema_in, root);

  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const auto& alt : schema["oneOf"]) {
      std::string ignored;
      if (validate(value, alt, root, &ignored)) ++matches;
    }
    if (matches != 1) {
      *why = "oneOf matched " + std::to_string(matches) + " alternatives";
      return false;
    }
    return true;
  }

  if (schema.contains("enum")) {
    for (const auto& allowed : schema["enum"])
      if (value == allowed) return true;
    *why = "value not in enum: " + value.dump();
    return false;
  }

  if (schema.contains("type")) {
    const std::string type = schema["type"].get<std::string>();
    bool ok = (type == "object" && value.is_object()) ||
              (type == "array" && value.is_array()) ||
              (type == "string" && value.is_string()) ||
              (type == "integer" && value.is_number_integer()) ||
              (type == "number" && value.is_number()) ||
              (type == "boolean" && value.is_boolean());
    if (!ok) {
      *why = "expected type " + type + ", got " + value.dump().substr(0, 60);
      return false;
    }
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) {
          *why = "missing required key '" + key.get<std::string>() + "'";
          return false;
        }
    if (schema.contains("properties")) {
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (schema["properties"].contains(it.key())) {
          if (!validate(it.value(), schema["properties"][it.key()], root, why)) {
            *why = "at key '" + it.key() + "': " + *why;
            return false;
          }
        } else if (schema.contains("additionalProperties") &&
                   schema["additionalProperties"].is_boolean() &&
                   !schema["additionalProperties"].get<bool>()) {
          *why = "unexpected key '" + it.key() + "'";
          return false;
        }
      }
    }
  }

  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!validate(value[i], schema["items"], root, why)) {
        *why = "at index " + std::to_string(i) + ": " + *why;
        return false;
      }
  }

  return true;
}

inline bool validate_report(const json& value, const json& schema,
                            std::string* why) {
  return validate(value, schema, schema, why);
}

}  // namespace schema_check

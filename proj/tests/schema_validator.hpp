#pragma once

// Interpreter for the subset of JSON Schema draft-07 used by
// schema/branchcheck-output.schema.json: type, enum, const, anyOf, required,
// properties, additionalProperties, items, minItems, maxItems.

#include <json.hpp>

#include <string>
#include <vector>

namespace branchcheck::testutil {

using nlohmann::json;

inline bool matches_type(const json& value, const std::string& type) {
    if (type == "null") return value.is_null();
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    return false;
}

inline void validate_schema(const json& schema, const json& value, const std::string& path,
                            std::vector<std::string>& errors) {
    if (schema.contains("anyOf")) {
        for (const json& option : schema["anyOf"]) {
            std::vector<std::string> option_errors;
            validate_schema(option, value, path, option_errors);
            if (option_errors.empty()) return;
        }
        errors.push_back(path + ": no anyOf branch matched " + value.dump());
        return;
    }
    if (schema.contains("const")) {
        if (value != schema["const"])
            errors.push_back(path + ": expected const " + schema["const"].dump());
        return;
    }
    if (schema.contains("enum")) {
        for (const json& allowed : schema["enum"])
            if (value == allowed) return;
        errors.push_back(path + ": " + value.dump() + " not in enum");
        return;
    }
    if (schema.contains("type") && !matches_type(value, schema["type"].get<std::string>())) {
        errors.push_back(path + ": expected type " + schema["type"].get<std::string>() + ", got " +
                         value.dump());
        return;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required key " + key.get<std::string>());
        const json properties =
            schema.contains("properties") ? schema["properties"] : json::object();
        for (const auto& [key, member] : value.items()) {
            if (properties.contains(key)) {
                validate_schema(properties[key], member, path + "." + key, errors);
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"] == false) {
                errors.push_back(path + ": unexpected key " + key);
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
            errors.push_back(path + ": fewer than minItems elements");
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
            errors.push_back(path + ": more than maxItems elements");
        if (schema.contains("items"))
            for (std::size_t k = 0; k < value.size(); ++k)
                validate_schema(schema["items"], value[k],
                                path + "[" + std::to_string(k) + "]", errors);
    }
}

inline std::vector<std::string> validate_against_schema(const json& schema, const json& value) {
    std::vector<std::string> errors;
    validate_schema(schema, value, "$", errors);
    return errors;
}

}  // namespace branchcheck::testutil

#pragma once

// Test-only validator for the subset of JSON Schema used by the shipped
// schemas: type (string or list), enum, required, properties,
// additionalProperties (bool or schema), items, pattern, and file-relative
// $ref.

#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

namespace schema_lite {

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return nlohmann::json::parse(in);
}

inline bool type_matches(const std::string& type, const nlohmann::json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline bool validate(const nlohmann::json& schema, const nlohmann::json& value,
                     const std::string& schema_dir, std::string& error,
                     const std::string& path = "$") {
    using nlohmann::json;

    if (schema.contains("$ref"))
        return validate(load_json_file(schema_dir + "/" + schema["$ref"].get<std::string>()),
                        value, schema_dir, error, path);

    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), value);
        } else {
            for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
        }
        if (!ok) {
            error = path + ": type mismatch";
            return false;
        }
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || alt == value;
        if (!ok) {
            error = path + ": not in enum";
            return false;
        }
    }

    if (schema.contains("pattern") && value.is_string()) {
        const std::string pattern = schema["pattern"].get<std::string>();
        const std::string& text = value.get_ref<const std::string&>();
        bool ok;
        if (pattern == "^[0-9]+$") {
            // std::regex recurses per character and overflows the stack on
            // multi-kilobyte decimal orders; check the digits directly.
            ok = !text.empty() &&
                 text.find_first_not_of("0123456789") == std::string::npos;
        } else {
            ok = std::regex_search(text, std::regex(pattern));
        }
        if (!ok) {
            error = path + ": pattern mismatch";
            return false;
        }
    }

    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    error = path + ": missing required key " + key.get<std::string>();
                    return false;
                }
        const json props = schema.value("properties", json::object());
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                if (!validate(props[key], sub, schema_dir, error, path + "." + key)) return false;
            } else if (schema.contains("additionalProperties")) {
                const json& ap = schema["additionalProperties"];
                if (ap.is_boolean()) {
                    if (!ap.get<bool>()) {
                        error = path + ": unexpected key " + key;
                        return false;
                    }
                } else if (!validate(ap, sub, schema_dir, error, path + "." + key)) {
                    return false;
                }
            }
        }
    }

    if (value.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& element : value) {
            if (!validate(schema["items"], element, schema_dir, error,
                          path + "[" + std::to_string(i) + "]"))
                return false;
            ++i;
        }
    }

    return true;
}

inline bool validate_against_file(const std::string& schema_path, const nlohmann::json& value,
                                  std::string& error) {
    const auto slash = schema_path.find_last_of('/');
    const std::string dir = slash == std::string::npos ? "." : schema_path.substr(0, slash);
    return validate(load_json_file(schema_path), value, dir, error);
}

}  // namespace schema_lite

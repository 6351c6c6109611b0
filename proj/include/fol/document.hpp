#pragma once

#include "fol/surface_model.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace fol {

inline constexpr const char* kSchemaVersion = "1";

struct Document {
    std::string schema_version = kSchemaVersion;
    SurfaceModel model;
    std::map<std::string, QDivisor> divisors;
    bool big = false;
    nlohmann::json metadata = nlohmann::json::object();

    friend bool operator==(const Document&, const Document&) = default;
};

// Throws ParseError on malformed JSON or rationals, SchemaError on structure.
Document parse_document(const std::string& text);

// Canonical form: sorted keys, model order for arrays, rationals as strings.
std::string serialize_document(const Document& doc);

Document load_document(const std::string& path);
void save_document(const std::string& path, const Document& doc);

nlohmann::json rational_json(const Rational& r);
nlohmann::json divisor_json(const QDivisor& d);

}  // namespace fol

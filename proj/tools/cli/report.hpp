#pragma once

#include <string>

#include <json.hpp>

#include "galtrop/complex.hpp"
#include "galtrop/homology.hpp"

namespace galtrop::cli {

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

nlohmann::json point_json(const TropPoint& p, const std::optional<Fan>& fan);
nlohmann::json complex_json(const TropicalComplex& c);
nlohmann::json matrix_json(const QMatrix& m);
nlohmann::json valuations_json(const std::vector<Valuation>& values);

/// {"command": ..., "outputs": ..., "provenance": {...}}; keys are sorted on output.
nlohmann::json make_report(const nlohmann::json& command, nlohmann::json outputs, const std::string& scene_bytes);

}  // namespace galtrop::cli

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "galtrop/fan.hpp"
#include "galtrop/laurent.hpp"
#include "galtrop/twist.hpp"

namespace galtrop::cli {

inline constexpr int kSchemaVersion = 1;

/// Scene data that does not parse or validate; `field` is a JSON path such as "fan.rays[2]".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Everything a command may need. `level` bounds t-exponent denominators and is the
/// cyclotomic level of every coefficient and of the twist.
struct Scene {
  int level = 1;
  std::optional<Fan> fan;
  std::optional<TwistedToricVariety> twist;
  std::optional<LaurentPolynomial> polynomial;
  std::vector<std::vector<PuiseuxSeries>> points;
  std::optional<int> embedding_rank;
  std::vector<LaurentPolynomial> embedding;
};

Scene parse_scene(const nlohmann::json& j);
nlohmann::json serialize_scene(const Scene& scene);

/// The twist, or the trivial one on the scene fan. Throws ParseError when there is no fan.
TwistedToricVariety scene_twist(const Scene& scene);

nlohmann::json series_to_json(const PuiseuxSeries& s, int level);

}  // namespace galtrop::cli

#include "report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "galtrop/errors.hpp"
#include "galtrop/version.hpp"

namespace galtrop::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

json rationals(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

json point_json(const TropPoint& p, const std::optional<Fan>& fan) {
  json sed = json::array();
  if (!p.is_interior() && fan) sed = fan->cones()[p.sedentarity()];
  return {{"sedentarity", sed}, {"coords", rationals(p.coords())}};
}

json complex_json(const TropicalComplex& c) {
  json vertices = json::array(), edges = json::array(), rays = json::array();
  for (const auto& v : c.vertices) vertices.push_back(point_json(v, c.fan));
  for (const auto& e : c.edges) {
    edges.push_back({{"tail", e.tail}, {"head", e.head}, {"direction", e.direction}, {"weight", e.weight}});
  }
  for (const auto& r : c.rays) {
    rays.push_back({{"vertex", r.vertex},
                    {"direction", r.direction},
                    {"weight", r.weight},
                    {"boundary", r.boundary ? json(*r.boundary) : json(nullptr)}});
  }
  return {{"rank", c.rank}, {"vertices", vertices}, {"edges", edges}, {"rays", rays}};
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json valuations_json(const std::vector<Valuation>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json make_report(const json& command, json outputs, const std::string& scene_bytes) {
  return {{"command", command},
          {"outputs", std::move(outputs)},
          {"provenance", {{"tool_version", kVersion}, {"input_hash", sha256_hex(scene_bytes)}}}};
}

}  // namespace galtrop::cli

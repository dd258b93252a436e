#include "scene.hpp"

#include "galtrop/errors.hpp"

namespace galtrop::cli {

using nlohmann::json;

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return obj.at(key);
}

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

long to_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long>();
}

const json& to_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Rational to_rational(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a rational string \"a/b\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const MalformedInput& e) {
    throw ParseError(path, e.what());
  }
}

IntVector to_int_vector(const json& j, const std::string& path, std::optional<int> length = std::nullopt) {
  to_array(j, path);
  if (length && static_cast<int>(j.size()) != *length) {
    throw ParseError(path, "expected " + std::to_string(*length) + " entries");
  }
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_long(j[i], at(path, i)));
  return out;
}

PuiseuxSeries to_series(const json& j, int level, const std::string& path) {
  to_array(j, path);
  PuiseuxSeries out(level);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tp = at(path, i);
    const Rational exponent = to_rational(require(j[i], "t_exp", tp), child(tp, "t_exp"));
    if (level % exponent.get_den() != 0) {
      throw ParseError(child(tp, "t_exp"), "denominator does not divide the scene level");
    }
    const json& cj = to_array(require(j[i], "cyc_coeffs", tp), child(tp, "cyc_coeffs"));
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < cj.size(); ++k) coeffs.push_back(to_rational(cj[k], at(child(tp, "cyc_coeffs"), k)));
    PuiseuxSeries::TermMap term;
    term.emplace(exponent, Cyclotomic(level, coeffs));
    out += PuiseuxSeries(level, term);
  }
  return out;
}

LaurentPolynomial to_polynomial(const json& terms, int rank, int level, const std::string& path) {
  to_array(terms, path);
  LaurentPolynomial out(rank);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = at(path, i);
    const IntVector u = to_int_vector(require(terms[i], "exponent", tp), child(tp, "exponent"), rank);
    const PuiseuxSeries c = to_series(require(terms[i], "coeff", tp), level, child(tp, "coeff"));
    if (!c.is_zero()) out += LaurentPolynomial::monomial(u, c);
  }
  return out;
}

Fan to_fan(const json& j) {
  const int rank = static_cast<int>(to_long(require(j, "rank", "fan"), "fan.rank"));
  if (rank < 0) throw ParseError("fan.rank", "rank must be nonnegative");
  const json& rays = to_array(require(j, "rays", "fan"), "fan.rays");
  std::vector<IntVector> ray_list;
  for (std::size_t i = 0; i < rays.size(); ++i) ray_list.push_back(to_int_vector(rays[i], at("fan.rays", i), rank));
  const json& cones = to_array(require(j, "cones", "fan"), "fan.cones");
  std::vector<Cone> cone_list;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    Cone c;
    for (long r : to_int_vector(cones[i], at("fan.cones", i))) {
      if (r < 0 || r >= static_cast<long>(ray_list.size())) throw ParseError(at("fan.cones", i), "ray index out of range");
      c.push_back(static_cast<int>(r));
    }
    cone_list.push_back(c);
  }
  try {
    return Fan(rank, ray_list, cone_list);
  } catch (const MalformedInput& e) {
    throw ParseError("fan", e.what());
  }
}

TwistedToricVariety to_twist(const json& j, const Fan& fan, int level) {
  const json& orders = to_array(require(j, "orders", "twist"), "twist.orders");
  const json& gens = to_array(require(j, "generators", "twist"), "twist.generators");
  if (gens.size() != orders.size()) throw ParseError("twist.generators", "one matrix per group order is required");
  std::vector<int> order_list;
  std::vector<LatticeMap> matrices;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const long m = to_long(orders[i], at("twist.orders", i));
    if (m < 1) throw ParseError(at("twist.orders", i), "orders must be positive");
    order_list.push_back(static_cast<int>(m));
    const std::string gp = at("twist.generators", i);
    to_array(gens[i], gp);
    if (static_cast<int>(gens[i].size()) != fan.rank()) throw ParseError(gp, "matrix must be rank x rank");
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < gens[i].size(); ++r) rows.push_back(to_int_vector(gens[i][r], at(gp, r), fan.rank()));
    matrices.emplace_back(IntMatrix::from_rows(rows, fan.rank()));
  }
  std::vector<long> residues(orders.size(), 0);
  if (j.contains("residues")) {
    residues = to_int_vector(j.at("residues"), "twist.residues", static_cast<int>(orders.size()));
  }
  return make_twist(fan, matrices, order_list, residues, level);
}

json rational_json(const Rational& q) { return to_string(q); }

json polynomial_terms(const LaurentPolynomial& f, int level) {
  json terms = json::array();
  const LaurentPolynomial lifted = f.at_level(level);
  for (const auto& [u, c] : lifted.terms()) {
    terms.push_back({{"exponent", u}, {"coeff", series_to_json(c, level)}});
  }
  return terms;
}

}  // namespace

json series_to_json(const PuiseuxSeries& s, int level) {
  json out = json::array();
  const PuiseuxSeries lifted = s.at_level(level);
  for (const auto& [q, c] : lifted.terms()) {
    json coeffs = json::array();
    auto values = c.coeffs();
    while (!values.empty() && values.back() == 0) values.pop_back();
    for (const auto& v : values) coeffs.push_back(rational_json(v));
    out.push_back({{"t_exp", to_string(q)}, {"cyc_coeffs", coeffs}});
  }
  return out;
}

Scene parse_scene(const json& j) {
  if (!j.is_object()) throw ParseError("", "scene must be a JSON object");
  const long version = to_long(require(j, "schema_version", ""), "schema_version");
  if (version != kSchemaVersion) throw ParseError("schema_version", "unsupported schema version");
  Scene s;
  if (j.contains("level")) {
    const long level = to_long(j.at("level"), "level");
    if (level < 1 || level > 10000) throw ParseError("level", "level must be a positive integer");
    s.level = static_cast<int>(level);
  }
  if (j.contains("fan")) s.fan = to_fan(j.at("fan"));
  if (j.contains("twist")) {
    if (!s.fan) throw ParseError("twist", "a twist needs a fan");
    s.twist = to_twist(j.at("twist"), *s.fan, s.level);
  }
  if (j.contains("polynomial")) {
    const json& p = j.at("polynomial");
    const int rank = static_cast<int>(to_long(require(p, "rank", "polynomial"), "polynomial.rank"));
    if (s.fan && rank != s.fan->rank()) throw ParseError("polynomial.rank", "does not match the fan rank");
    s.polynomial = to_polynomial(require(p, "terms", "polynomial"), rank, s.level, "polynomial.terms");
  }
  if (j.contains("points")) {
    const json& pts = to_array(j.at("points"), "points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      to_array(pts[i], at("points", i));
      std::vector<PuiseuxSeries> point;
      for (std::size_t k = 0; k < pts[i].size(); ++k) point.push_back(to_series(pts[i][k], s.level, at(at("points", i), k)));
      s.points.push_back(std::move(point));
    }
  }
  if (j.contains("embedding")) {
    const json& e = j.at("embedding");
    const int rank = static_cast<int>(to_long(require(e, "rank", "embedding"), "embedding.rank"));
    s.embedding_rank = rank;
    const json& coords = to_array(require(e, "coordinates", "embedding"), "embedding.coordinates");
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const std::string cp = at("embedding.coordinates", i);
      s.embedding.push_back(to_polynomial(require(coords[i], "terms", cp), rank, s.level, child(cp, "terms")));
    }
    if (s.fan && static_cast<int>(s.embedding.size()) != s.fan->rank()) {
      throw ParseError("embedding.coordinates", "coordinate count must equal the fan rank");
    }
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (static_cast<int>(s.points[i].size()) != rank) throw ParseError(at("points", i), "point rank differs from embedding.rank");
    }
  }
  return s;
}

json serialize_scene(const Scene& s) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["level"] = s.level;
  if (s.fan) {
    json cones = json::array();
    for (int c : s.fan->maximal_cones()) cones.push_back(s.fan->cones()[c]);
    j["fan"] = {{"rank", s.fan->rank()}, {"rays", s.fan->rays()}, {"cones", cones}};
  }
  if (s.twist) {
    json gens = json::array();
    for (const auto& m : s.twist->generator_matrices()) {
      json rows = json::array();
      for (int r = 0; r < m.rank(); ++r) rows.push_back(m.matrix().row(r));
      gens.push_back(rows);
    }
    j["twist"] = {{"orders", s.twist->group().cyclic_orders()},
                  {"generators", gens},
                  {"residues", s.twist->generator_residues()}};
  }
  if (s.polynomial) {
    j["polynomial"] = {{"rank", s.polynomial->rank()}, {"terms", polynomial_terms(*s.polynomial, s.level)}};
  }
  if (!s.points.empty()) {
    json pts = json::array();
    for (const auto& p : s.points) {
      json point = json::array();
      for (const auto& x : p) point.push_back(series_to_json(x, s.level));
      pts.push_back(point);
    }
    j["points"] = pts;
  }
  if (s.embedding_rank) {
    json coords = json::array();
    for (const auto& f : s.embedding) coords.push_back({{"terms", polynomial_terms(f, s.level)}});
    j["embedding"] = {{"rank", *s.embedding_rank}, {"coordinates", coords}};
  }
  return j;
}

TwistedToricVariety scene_twist(const Scene& s) {
  if (s.twist) return *s.twist;
  if (!s.fan) throw ParseError("fan", "this command needs a fan");
  return trivial_twist(*s.fan, s.level);
}

}  // namespace galtrop::cli

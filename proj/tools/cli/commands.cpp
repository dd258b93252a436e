#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "galtrop/complex.hpp"
#include "galtrop/embedding.hpp"
#include "galtrop/errors.hpp"
#include "galtrop/groebner.hpp"
#include "galtrop/homology.hpp"
#include "report.hpp"
#include "scene.hpp"
#include "svg.hpp"

namespace galtrop::cli {

using nlohmann::json;

namespace {

/// A check ran to completion and came out false.
struct Verdict {
  json outputs;
  bool passed = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("scene", "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw PreconditionError("cannot write " + path);
  file << bytes;
}

const LaurentPolynomial& require_polynomial(const Scene& s) {
  if (!s.polynomial) throw ParseError("polynomial", "this command needs a polynomial");
  return *s.polynomial;
}

EmbeddingData require_embedding(const Scene& s) {
  if (!s.embedding_rank) throw ParseError("embedding", "this command needs an embedding");
  return EmbeddingData{s.embedding, scene_twist(s)};
}

int generator_element(const TwistedToricVariety& t, int index) {
  const auto& gens = t.group().generators();
  if (gens.empty() && index == 0) return t.group().identity();
  if (index < 0 || index >= static_cast<int>(gens.size())) throw ParseError("--generator", "no such generator");
  return gens[index];
}

/// The tropical curve, closed in the scene fan whenever that fan is complete of rank 2.
TropicalComplex scene_curve(const Scene& s) {
  TropicalComplex c = trop_curve_2d(require_polynomial(s));
  if (s.fan && s.fan->rank() == 2 && is_complete_sampled(*s.fan)) c = close_in_toric_surface(c, *s.fan);
  return c;
}

std::vector<int> orbit_classes(const TropicalComplex& c, const Scene& s) {
  std::vector<int> cls(c.one_cells().size(), 0);
  if (!s.twist || (c.fan && !(*c.fan == s.twist->fan()))) return cls;
  const auto orbits = one_cell_orbits(c, *s.twist);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (int cell : orbits[o]) cls[cell] = static_cast<int>(o);
  }
  return cls;
}

double effective_clip(double flag) {
  const char* env = std::getenv("GALTROP_CLIP");
  if (env == nullptr || *env == '\0') return flag;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (*end != '\0' || !(value > 0)) throw ParseError("GALTROP_CLIP", "expected a positive number");
  return value;
}

Verdict tropicalize(const Scene& s, const Options& o) {
  json outputs;
  if (s.polynomial) {
    const TropicalComplex c = scene_curve(s);
    const auto classes = orbit_classes(c, s);
    outputs["complex"] = complex_json(c);
    outputs["closed"] = c.is_closed();
    outputs["first_betti_number"] = c.first_betti_number();
    outputs["connected_components"] = c.connected_components();
    outputs["one_cell_orbit"] = classes;
    if (o.svg_path) write_file(*o.svg_path, render_svg(c, classes, SvgOptions{effective_clip(o.clip)}));
  } else if (o.svg_path) {
    throw ParseError("polynomial", "--svg needs a polynomial");
  }
  if (!s.points.empty()) {
    json points = json::array();
    for (const auto& x : s.points) {
      const auto coords = s.embedding_rank ? evaluate_embedding(require_embedding(s), x) : x;
      const auto values = trop_point(coords);
      json entry{{"values", valuations_json(values)}};
      if (s.fan && static_cast<int>(values.size()) == s.fan->rank()) {
        entry["image"] = point_json(trop_point_in_fan(values, *s.fan), s.fan);
      }
      points.push_back(entry);
    }
    outputs["points"] = points;
  }
  if (outputs.is_null()) throw ParseError("polynomial", "nothing to tropicalize: no polynomial and no points");
  return {outputs, true};
}

Verdict check_equivariance(const Scene& s, const Options&) {
  if (!s.twist) throw ParseError("twist", "this command needs a twist");
  const TwistedToricVariety& t = *s.twist;
  json outputs;
  bool passed = true;
  if (s.polynomial) {
    const bool invariant = is_invariant_hypersurface(t, *s.polynomial);
    outputs["polynomial_invariant"] = invariant;
    passed = passed && invariant;
    if (s.polynomial->rank() == 2 && t.fan().rank() == 2) {
      const TropicalComplex c = scene_curve(s);
      const auto violation = find_equivariance_violation(c, t);
      outputs["complex_equivariant"] = !violation.has_value();
      if (violation) {
        json cell;
        if (violation->cell_kind == "vertex") {
          cell = point_json(c.vertices[violation->cell], c.fan);
        } else if (violation->cell_kind == "edge") {
          const Edge& e = c.one_cells()[violation->cell];
          cell = {{"tail", point_json(c.vertices[e.tail], c.fan)},
                  {"head", point_json(c.vertices[e.head], c.fan)},
                  {"weight", e.weight}};
        } else {
          const Ray& r = c.rays[violation->cell];
          cell = {{"vertex", point_json(c.vertices[r.vertex], c.fan)}, {"direction", r.direction}, {"weight", r.weight}};
        }
        outputs["witness"] = {{"generator", violation->generator},
                              {"cell_kind", violation->cell_kind},
                              {"cell_index", violation->cell},
                              {"cell", cell}};
        passed = false;
      } else {
        outputs["witness"] = nullptr;
      }
    }
  }
  if (s.embedding_rank) {
    const bool consistent = check_embedding_consistency(require_embedding(s));
    outputs["embedding_consistent"] = consistent;
    passed = passed && consistent;
  }
  if (outputs.is_null()) throw ParseError("polynomial", "nothing to check: no polynomial and no embedding");
  return {outputs, passed};
}

std::string h_key(int p, int q) { return "H" + std::to_string(p) + std::to_string(q); }

Verdict homology(const Scene& s, const Options&) {
  const TropicalComplex c = scene_curve(s);
  if (!c.is_closed()) throw PreconditionError("homology needs a complete rank-2 fan to close the curve in");
  const HomologyReport r = homology_report(c, scene_twist(s));
  json dims, codims, actions, characters;
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      dims[h_key(p, q)] = r.dims[p][q];
      codims[h_key(p, q)] = r.cohomology_dims[p][q];
    }
  }
  for (const auto& [pq, matrices] : r.generator_action) {
    json list = json::array();
    for (const auto& m : matrices) list.push_back(matrix_json(m));
    actions[h_key(pq.first, pq.second)] = list;
  }
  for (const auto& [pq, traces] : r.characters) {
    json list = json::array();
    for (const auto& x : traces) list.push_back(to_string(x));
    characters[h_key(pq.first, pq.second)] = list;
  }
  json outputs{{"dims", dims}, {"cohomology_dims", codims}, {"first_betti_number", c.first_betti_number()}};
  if (!actions.is_null()) outputs["generator_action"] = actions;
  if (!characters.is_null()) outputs["characters"] = characters;
  return {outputs, true};
}

Verdict orbit(const Scene& s, const Options& o) {
  const EmbeddingData e = require_embedding(s);
  if (s.points.empty()) throw ParseError("points", "this command needs the points of an orbit");
  const OrbitImage image = orbit_image(s.points, e, generator_element(e.target, o.generator));
  json values = json::array(), images = json::array();
  for (const auto& v : image.values) values.push_back(valuations_json(v));
  for (const auto& p : image.images) images.push_back(point_json(p, e.target.fan()));
  return {{{"values", values},
           {"images", images},
           {"injective", image.injective},
           {"action_compatible", image.action_compatible}},
          true};
}

Verdict groebner(const Scene& s, const Options& o) {
  const LaurentPolynomial& f = require_polynomial(s);
  if (!o.at) throw ParseError("--at", "groebner-cell needs --at");
  const std::vector<Rational> v = parse_point_list(*o.at);
  if (static_cast<int>(v.size()) != f.rank()) throw ParseError("--at", "point rank differs from polynomial.rank");
  const auto cell = groebner_cell(f, v);
  json outputs{{"at", json::array()}, {"cell", cell}};
  for (const auto& x : v) outputs["at"].push_back(to_string(x));
  if (s.twist && s.twist->fan().rank() == f.rank()) {
    json transported = json::array();
    for (int g : s.twist->group().generators()) {
      const RationalVector w = act_on_trop_point(*s.twist, g, TropPoint::interior(v)).coords();
      json at_w = json::array();
      for (const auto& x : w) at_w.push_back(to_string(x));
      const auto image = groebner_cell(f, w);
      transported.push_back({{"generator", g},
                             {"at", at_w},
                             {"cell", image},
                             {"matches_transport", image == map_groebner_cell(*s.twist, g, cell)}});
    }
    outputs["transported"] = transported;
  }
  return {outputs, true};
}

json equivariantize(const Scene& s, const Options& o) {
  if (!o.order) throw ParseError("--order", "equivariantize needs --order");
  const int m = *o.order;
  if (m < 1) throw ParseError("--order", "order must be positive");
  if (m % s.level != 0) throw PreconditionError("scene level " + std::to_string(s.level) + " does not divide the order");
  const EmbeddingData e = equivariantize_embedding(require_embedding(s), m);
  Scene out;
  out.level = m;
  out.fan = e.target.fan();
  out.twist = e.target;
  out.embedding_rank = s.embedding_rank;
  out.embedding = e.coordinates;
  for (const auto& x : s.points) {
    std::vector<PuiseuxSeries> lifted;
    for (const auto& c : x) lifted.push_back(c.at_level(m));
    out.points.push_back(std::move(lifted));
  }
  return serialize_scene(out);
}

json diagnostic(const ParseError& e) { return {{"error", "parse"}, {"field", e.field()}, {"message", e.what()}}; }

json diagnostic(const std::exception& e) { return {{"error", "precondition"}, {"message", e.what()}}; }

}  // namespace

std::vector<Rational> parse_point_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const MalformedInput& e) {
      throw ParseError("--at", e.what());
    }
  }
  if (out.empty()) throw ParseError("--at", "expected comma-separated rationals");
  return out;
}

int run(const Options& options, std::ostream& out) {
  static const std::map<std::string, std::function<Verdict(const Scene&, const Options&)>> kChecks{
      {"tropicalize", tropicalize},
      {"check-equivariance", check_equivariance},
      {"homology", homology},
      {"orbit", orbit},
      {"groebner-cell", groebner},
  };
  auto emit = [&](const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (options.output_path) {
      write_file(*options.output_path, text);
    } else {
      out << text;
    }
  };
  try {
    const std::string bytes = read_file(options.scene_path);
    const json parsed = json::parse(bytes, nullptr, false);
    if (parsed.is_discarded()) throw ParseError("", "not valid JSON");
    const Scene scene = parse_scene(parsed);
    if (options.command == "equivariantize") {
      emit(equivariantize(scene, options));
      return kOk;
    }
    const auto it = kChecks.find(options.command);
    if (it == kChecks.end()) throw ParseError("command", "unknown command " + options.command);
    const Verdict v = it->second(scene, options);
    json command{{"name", options.command}, {"scene", options.scene_path}};
    if (options.at) command["at"] = *options.at;
    if (options.command == "orbit") command["generator"] = options.generator;
    emit(make_report(command, v.outputs, bytes));
    return v.passed ? kOk : kCheckFailed;
  } catch (const ParseError& e) {
    out << diagnostic(e).dump() << "\n";
    return kParseFailure;
  } catch (const Error& e) {
    out << diagnostic(e).dump() << "\n";
    return kPreconditionFailure;
  }
}

}  // namespace galtrop::cli

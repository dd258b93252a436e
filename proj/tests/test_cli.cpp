#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <map>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "commands.hpp"
#include "galtrop/errors.hpp"
#include "report.hpp"
#include "scene.hpp"
#include "svg.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation galtrop(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GALTROP_EXE + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Invocation r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scene(const std::string& name) { return std::string(GALTROP_SCENES) + "/" + name + ".json"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json load(const std::string& path) { return json::parse(slurp(path)); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("galtrop_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const json& j) const {
    std::ofstream(file(name)) << j.dump(2);
    return file(name);
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

const std::array<const char*, 5> kShipped{"brauer_severi_sextic", "tropical_line", "p1_example", "p1_naive", "p1_seed"};

TEST(CliScenes, ShippedScenesAreCanonical) {
  for (const char* name : kShipped) {
    const std::string bytes = slurp(scene(name));
    const auto reparsed = galtrop::cli::serialize_scene(galtrop::cli::parse_scene(json::parse(bytes)));
    EXPECT_EQ(reparsed.dump(2) + "\n", bytes) << name;
  }
}

TEST(CliScenes, RoundTripIsIdempotent) {
  for (const char* name : kShipped) {
    const json once = galtrop::cli::serialize_scene(galtrop::cli::parse_scene(load(scene(name))));
    EXPECT_EQ(galtrop::cli::serialize_scene(galtrop::cli::parse_scene(once)), once) << name;
  }
}

TEST(CliExit, SuccessOnSexticHomology) {
  const Invocation r = galtrop("homology " + scene("brauer_severi_sextic"));
  ASSERT_EQ(r.code, 0);
  const json out = json::parse(r.out)["outputs"];
  EXPECT_EQ(out["dims"], (json{{"H00", 1}, {"H01", 10}, {"H10", 10}, {"H11", 1}}));
  EXPECT_EQ(out["cohomology_dims"], out["dims"]);
  EXPECT_EQ(out["characters"]["H01"], (json{"10", "1", "1"}));
  EXPECT_EQ(out["generator_action"]["H01"].size(), 1u);
}

TEST(CliExit, CheckFailedOnNonInvariantCurve) {
  TempDir dir;
  json s = load(scene("brauer_severi_sextic"));
  for (auto& t : s["polynomial"]["terms"]) {
    if (t["exponent"] == json{-2, -2}) t["coeff"][0]["t_exp"] = "11";
  }
  const Invocation r = galtrop("check-equivariance " + dir.write("broken.json", s));
  ASSERT_EQ(r.code, 1);
  const json out = json::parse(r.out)["outputs"];
  EXPECT_FALSE(out["polynomial_invariant"].get<bool>());
  EXPECT_FALSE(out["complex_equivariant"].get<bool>());
  ASSERT_TRUE(out["witness"].is_object());
  EXPECT_TRUE(out["witness"].contains("cell_kind"));
}

TEST(CliExit, CheckPassesOnShippedTwists) {
  for (const char* name : {"brauer_severi_sextic", "tropical_line", "p1_example"}) {
    EXPECT_EQ(galtrop(std::string("check-equivariance ") + scene(name)).code, 0) << name;
  }
}

TEST(CliExit, ParseErrorNamesTheField) {
  TempDir dir;
  json s = load(scene("brauer_severi_sextic"));
  s["fan"]["rays"][1] = json{0, "x"};
  const Invocation r = galtrop("homology " + dir.write("bad.json", s));
  ASSERT_EQ(r.code, 2);
  const json d = json::parse(r.out);
  EXPECT_EQ(d["error"], "parse");
  EXPECT_EQ(d["field"], "fan.rays[1][1]");
}

TEST(CliExit, ParseErrorOnBadRationalAndMissingFields) {
  TempDir dir;
  json s = load(scene("p1_example"));
  s["points"][0][0][0]["t_exp"] = "1/0";
  Invocation r = galtrop("orbit " + dir.write("a.json", s));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["field"], "points[0][0][0].t_exp");

  json t = load(scene("tropical_line"));
  t.erase("schema_version");
  r = galtrop("tropicalize " + dir.write("b.json", t));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["field"], "schema_version");

  std::ofstream(dir.file("c.json")) << "{ not json";
  EXPECT_EQ(galtrop("tropicalize " + dir.file("c.json")).code, 2);
  EXPECT_EQ(galtrop("tropicalize " + dir.file("missing.json")).code, 2);
  EXPECT_EQ(galtrop("groebner-cell " + scene("tropical_line") + " --at 1/2").code, 2);
  EXPECT_EQ(galtrop("groebner-cell " + scene("tropical_line") + " --at a,b").code, 2);
  EXPECT_EQ(galtrop("no-such-command " + scene("tropical_line")).code, 2);
}

TEST(CliExit, PreconditionErrors) {
  Invocation r = galtrop("equivariantize " + scene("p1_naive") + " --order 2");
  ASSERT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.out)["error"], "precondition");
  // Level 2 data does not fit a group of order 3.
  EXPECT_EQ(galtrop("equivariantize " + scene("p1_seed") + " --order 3").code, 3);
  // A twist that is not a fan automorphism.
  TempDir dir;
  json s = load(scene("tropical_line"));
  s["twist"]["generators"][0] = json{{1, 1}, {0, 1}};
  EXPECT_EQ(galtrop("homology " + dir.write("shear.json", s)).code, 3);
}

TEST(CliOrbit, SegreExampleIsInjective) {
  const Invocation r = galtrop("orbit " + scene("p1_example"));
  ASSERT_EQ(r.code, 0);
  const json out = json::parse(r.out)["outputs"];
  EXPECT_EQ(out["values"], (json{{"inf", "1/2", "0"}, {"1/2", "inf", "0"}}));
  EXPECT_TRUE(out["injective"].get<bool>());
  EXPECT_TRUE(out["action_compatible"].get<bool>());
}

TEST(CliOrbit, NaiveLineCollapsesTheOrbit) {
  const Invocation r = galtrop("orbit " + scene("p1_naive"));
  ASSERT_EQ(r.code, 0);
  const json out = json::parse(r.out)["outputs"];
  EXPECT_EQ(out["values"], (json{{"1/2"}, {"1/2"}}));
  EXPECT_FALSE(out["injective"].get<bool>());
}

TEST(CliEquivariantize, SeedBecomesInjective) {
  TempDir dir;
  const std::string lifted = dir.file("lifted.json");
  ASSERT_EQ(galtrop("equivariantize " + scene("p1_seed") + " --order 2 -o " + lifted).code, 0);
  const json s = load(lifted);
  EXPECT_EQ(s["level"], 2);
  EXPECT_EQ(s["twist"]["orders"], json{2});
  EXPECT_EQ(s["twist"]["residues"], json{1});
  EXPECT_EQ(s["embedding"]["coordinates"].size(), 2u);
  EXPECT_EQ(galtrop("check-equivariance " + lifted).code, 0);
  const Invocation r = galtrop("orbit " + lifted);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["outputs"]["injective"].get<bool>());
}

TEST(CliTropicalize, SexticCurve) {
  const Invocation r = galtrop("tropicalize " + scene("brauer_severi_sextic"));
  ASSERT_EQ(r.code, 0);
  const json out = json::parse(r.out)["outputs"];
  EXPECT_TRUE(out["closed"].get<bool>());
  EXPECT_EQ(out["first_betti_number"], 10);
  EXPECT_EQ(out["complex"]["edges"].size(), 45u);
  // Orbit classes are constant along each orbit of size 1 or 3.
  std::map<int, int> sizes;
  for (int c : out["one_cell_orbit"]) ++sizes[c];
  for (const auto& [c, n] : sizes) EXPECT_TRUE(n == 1 || n == 3) << c;
}

TEST(CliTropicalize, PointsThroughTheEmbedding) {
  const Invocation r = galtrop("tropicalize " + scene("p1_example"));
  ASSERT_EQ(r.code, 0);
  const json pts = json::parse(r.out)["outputs"]["points"];
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0]["values"], (json{"inf", "1/2", "0"}));
  EXPECT_EQ(pts[0]["image"]["sedentarity"], json{0});
}

TEST(CliGroebner, TransportedCellsMatch) {
  const Invocation r = galtrop("groebner-cell " + scene("brauer_severi_sextic") + " --at 3/2,-1/3");
  ASSERT_EQ(r.code, 0);
  const json out = json::parse(r.out)["outputs"];
  ASSERT_EQ(out["transported"].size(), 1u);
  EXPECT_TRUE(out["transported"][0]["matches_transport"].get<bool>());
  // The tropical line is singular at its vertex: all three monomials attain the minimum.
  const json line = json::parse(galtrop("groebner-cell " + scene("tropical_line") + " --at 0,0").out);
  EXPECT_EQ(line["outputs"]["cell"].size(), 3u);
}

TEST(CliReport, DeterministicWithInputHash) {
  const std::string path = scene("brauer_severi_sextic");
  const Invocation a = galtrop("homology " + path);
  const Invocation b = galtrop("homology " + path);
  EXPECT_EQ(a.out, b.out);
  // Independent digest from the coreutils tool.
  FILE* pipe = popen(("sha256sum " + path).c_str(), "r");
  std::array<char, 65> digest{};
  ASSERT_EQ(std::fread(digest.data(), 1, 64, pipe), 64u);
  pclose(pipe);
  EXPECT_EQ(json::parse(a.out)["provenance"]["input_hash"], std::string(digest.data()));
  EXPECT_EQ(json::parse(a.out)["command"]["name"], "homology");
}

TEST(CliReport, Sha256KnownVectors) {
  EXPECT_EQ(galtrop::cli::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(galtrop::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(CliSvg, ByteIdenticalAcrossRuns) {
  TempDir dir;
  const std::string a = dir.file("a.svg"), b = dir.file("b.svg");
  ASSERT_EQ(galtrop("tropicalize " + scene("brauer_severi_sextic") + " --svg " + a).code, 0);
  ASSERT_EQ(galtrop("tropicalize " + scene("brauer_severi_sextic") + " --svg " + b).code, 0);
  const std::string svg = slurp(a);
  EXPECT_EQ(svg, slurp(b));
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  std::size_t hollow = 0;
  for (std::size_t at = svg.find("fill=\"white\" stroke"); at != std::string::npos; at = svg.find("fill=\"white\" stroke", at + 1)) ++hollow;
  EXPECT_EQ(hollow, 18u);
}

TEST(CliSvg, EnvironmentOverridesClip) {
  TempDir dir;
  const std::string base = "tropicalize " + scene("tropical_line") + " --svg ";
  ASSERT_EQ(galtrop(base + dir.file("flag3.svg") + " --clip 3").code, 0);
  ASSERT_EQ(galtrop(base + dir.file("flag6.svg") + " --clip 6").code, 0);
  ASSERT_EQ(galtrop(base + dir.file("env3.svg") + " --clip 6", "GALTROP_CLIP=3").code, 0);
  EXPECT_EQ(slurp(dir.file("env3.svg")), slurp(dir.file("flag3.svg")));
  EXPECT_NE(slurp(dir.file("flag3.svg")), slurp(dir.file("flag6.svg")));
  EXPECT_EQ(galtrop(base + dir.file("bad.svg"), "GALTROP_CLIP=-1").code, 2);
}

TEST(CliSvg, RayEndsOnTheClipSquare) {
  galtrop::TropicalComplex c;
  c.vertices.push_back(galtrop::TropPoint::interior({galtrop::Rational(0), galtrop::Rational(0)}));
  c.rays.push_back({0, {1, 2}, 1, std::nullopt});
  const std::string svg = galtrop::cli::render_svg(c, {}, {2.0, 10.0});
  // Origin at (30, 30); the ray leaves the square [-2, 2]^2 at (1, 2).
  EXPECT_NE(svg.find("x1=\"30.0000\" y1=\"30.0000\" x2=\"40.0000\" y2=\"10.0000\""), std::string::npos);
}

TEST(CliSvg, OnlyRankTwo) {
  galtrop::TropicalComplex c;
  c.rank = 3;
  EXPECT_THROW(galtrop::cli::render_svg(c, {}, {}), galtrop::PreconditionError);
}

TEST(CliArgs, PointListParsing) {
  const auto v = galtrop::cli::parse_point_list("1/2,-3,0");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], galtrop::Rational(1, 2));
  EXPECT_EQ(v[1], galtrop::Rational(-3));
  EXPECT_THROW(galtrop::cli::parse_point_list("1/2,,x"), galtrop::cli::ParseError);
}

}  // namespace

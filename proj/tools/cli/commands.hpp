#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "galtrop/rational.hpp"

namespace galtrop::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kParseFailure = 2, kPreconditionFailure = 3 };

struct Options {
  std::string command;
  std::string scene_path;
  std::optional<std::string> svg_path;
  std::optional<std::string> output_path;  // replaces stdout for the JSON result
  double clip = 6.0;                       // GALTROP_CLIP wins when set
  int generator = 0;                       // index into the twist's generator list
  std::optional<std::string> at;           // "p/q,r/s"
  std::optional<int> order;
};

/// Runs one command. JSON (result or diagnostic) goes to `out` unless output_path is set;
/// diagnostics always go to `out`.
int run(const Options& options, std::ostream& out);

/// Parses "a/b,c/d,..." into exact coordinates; throws ParseError naming "--at".
std::vector<Rational> parse_point_list(const std::string& text);

}  // namespace galtrop::cli

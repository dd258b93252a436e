#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "galtrop/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Galois-equivariant tropical geometry on JSON scenes"};
  app.set_version_flag("--version", std::string(galtrop::kVersion));
  app.require_subcommand(1, 1);

  galtrop::cli::Options options;
  auto add = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("scene", options.scene_path, "Scene JSON file")->required();
    sub->add_option("-o,--output", options.output_path, "Write the JSON result here instead of stdout");
    return sub;
  };

  CLI::App* trop = add("tropicalize", "Tropical curve and tropicalized points of the scene");
  trop->add_option("--svg", options.svg_path, "Also draw the curve (rank 2) to this SVG file");
  trop->add_option("--clip", options.clip, "Clip radius for rays; GALTROP_CLIP overrides it")
      ->check(CLI::PositiveNumber);
  add("check-equivariance", "Check the twist against the polynomial, curve and embedding");
  add("homology", "Tropical homology dimensions and the induced group representation");
  add("orbit", "Tropical images of a Galois orbit of points")
      ->add_option("--generator", options.generator, "Generator index");
  add("groebner-cell", "Initial-form support at a point")->add_option("--at", options.at, "Point \"p/q,r/s\"");
  add("equivariantize", "Equivariant embedding into the product of Galois conjugates")
      ->add_option("--order", options.order, "Group order m")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return galtrop::cli::kParseFailure;
  }
  options.command = app.get_subcommands().front()->get_name();
  return galtrop::cli::run(options, std::cout);
}

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "orbsurf/io.hpp"

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitInputError = 2;
constexpr int kExitUnknownCommand = 64;

const char* const kCommands[] = {"validate",  "classify-curve", "artin-test", "discrep",
                                 "b-discrep", "classify-pair",  "mmp-run"};

int list_fixtures() {
  orbsurf::Json j = orbsurf::Json::array();
  for (const std::string& name : orbsurf::fixture_names()) {
    const orbsurf::ProblemBundle bundle = orbsurf::fixture_bundle(name);
    orbsurf::Json entry;
    entry["name"] = name;
    entry["curves"] = bundle.config.curves;
    entry["boundary"] = bundle.delta.has_value();
    j.push_back(std::move(entry));
  }
  std::cout << orbsurf::dump_pretty(j);
  return kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbsurf: exact intersection theory, contraction tests and pair classification "
               "for combinatorial models of orbifold surface pairs"};
  app.require_subcommand(0, 1);

  bool fixtures_flag = false;
  app.add_flag("--fixtures", fixtures_flag, "list built-in configurations and exit");

  orbsurf::BundleSources sources;
  std::string surface, fixture, boundary, bdiv;
  app.add_option("--surface", surface, "surface configuration file (JSON)");
  app.add_option("--fixture", fixture, "built-in configuration name");
  app.add_option("--boundary", boundary, "boundary divisor file (JSON)");
  app.add_option("--bdiv", bdiv, "b-divisor spec file (JSON)");

  orbsurf::Options options;
  std::string epsilon = "1/2";
  std::string emit_tower;
  std::string curve;
  app.add_option("--depth", options.depth, "blowup tower depth (1..6)")->capture_default_str();
  app.add_option("--epsilon", epsilon, "epsilon for the epsilon-variant thresholds")
      ->capture_default_str();
  app.add_option("--bound-multiplier", options.bound_multiplier,
                 "cycle enumeration bound, in multiples of the fundamental cycle")
      ->capture_default_str();
  app.add_option("--max-steps", options.max_steps, "step limit for mmp-run")
      ->capture_default_str();
  app.add_option("--curve", curve, "curve id for classify-curve");
  app.add_option("--support", options.support, "curve ids for artin-test (default: all)")
      ->delimiter(',');
  app.add_option("--emit-tower", emit_tower, "write the enumerated tower as JSONL to this path");

  for (const char* name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUnknownCommand;
  }

  if (fixtures_flag) return list_fixtures();

  const auto subs = app.get_subcommands();
  if (subs.empty()) {
    std::cerr << app.help() << "\n";
    return kExitUnknownCommand;
  }

  try {
    if (!surface.empty()) sources.surface_path = surface;
    if (!fixture.empty()) sources.fixture = fixture;
    if (!boundary.empty()) sources.boundary_path = boundary;
    if (!bdiv.empty()) sources.bdiv_path = bdiv;
    if (!curve.empty()) options.curve = curve;
    if (!emit_tower.empty()) options.emit_tower = emit_tower;
    options.epsilon = orbsurf::Rational::parse(epsilon);

    const std::string command = subs.front()->get_name();
    const bool strict = command != "validate";
    const orbsurf::ProblemBundle bundle = orbsurf::load_bundle(sources, options, strict);
    return orbsurf::run_command(bundle, command, std::cout);
  } catch (const orbsurf::UnknownCommand& e) {
    std::cerr << e.what() << "\n";
    return kExitUnknownCommand;
  } catch (const orbsurf::Error& e) {
    orbsurf::Json j;
    j["error"] = e.what();
    std::cout << orbsurf::dump_pretty(j);
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}

#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orbsurf/discrepancy.hpp"
#include "orbsurf/mmp.hpp"

namespace orbsurf {

using Json = nlohmann::ordered_json;

// Flags shared by every CLI command.
struct Options {
  int depth = kDefaultTowerDepth;
  Rational epsilon = Rational(1, 2);
  long bound_multiplier = 2;
  int max_steps = 100;
  std::optional<CurveId> curve;
  std::vector<CurveId> support;
  std::optional<std::string> emit_tower;
};

struct ProblemBundle {
  CurveConfig config;
  std::optional<OrbifoldDivisor> delta;
  std::optional<BDivisorSpec> bdiv;
  Options options;
};

struct BundleSources {
  std::optional<std::string> fixture;
  std::optional<std::string> surface_path;
  std::optional<std::string> boundary_path;
  std::optional<std::string> bdiv_path;
};

// Surface configuration file schema (all rationals canonical strings):
// {"name", "smooth_model", "curves", "form", "kdeg", "k_self"}.
Json config_to_json(const CurveConfig& config);
CurveConfig config_from_json(const Json& j);

// Boundary file schema:
// {"components": [{"curve": str, "m": int} | {"curve": str, "d": str}, ...]}.
Json boundary_to_json(const OrbifoldDivisor& delta);
OrbifoldDivisor boundary_from_json(const Json& j);

// b-divisor file schema:
// {"base_ram": {curve: int}, "exceptional_ram": {address: int}, "default_ram": int}.
Json bspec_to_json(const BDivisorSpec& spec);
BDivisorSpec bspec_from_json(const Json& j);

Json validation_to_json(const ValidationReport& report);
Json pair_degree_to_json(const PairDegreeReport& report);
Json classification_to_json(const CurveClassification& c);
Json contraction_to_json(const ContractionVerdict& v);
Json tower_node_to_json(const TowerNode& node);
Json pair_class_to_json(const PairClass& pc);
Json step_to_json(const StepOutcome& s);

Json parse_json_text(const std::string& text, const std::string& origin);
Json load_json_file(const std::string& path);
std::string dump_pretty(const Json& j);

std::vector<std::string> fixture_names();
ProblemBundle fixture_bundle(const std::string& name);

// Reads and cross-validates a problem bundle. With enforce_config_invariants
// off, configuration invariant violations are left for the `validate`
// command to report instead of being thrown.
ProblemBundle load_bundle(const BundleSources& sources, const Options& options,
                          bool enforce_config_invariants = true);

// Dispatches one CLI command against a loaded bundle and writes the JSON
// report to `out`. Returns the process exit status (0 = verdict computed).
int run_command(const ProblemBundle& bundle, const std::string& command, std::ostream& out);

}  // namespace orbsurf

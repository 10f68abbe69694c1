#include "orbsurf/io.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "orbsurf/errors.hpp"

namespace orbsurf {

namespace {

void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                const std::string& what) {
  if (!obj.is_object()) throw ParseError(what + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (key == k) known = true;
    }
    if (!known) throw ParseError(what + " has unexpected key '" + key + "'");
  }
}

const Json& require_key(const Json& obj, const char* key, const std::string& what) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(what + " is missing key '" + key + "'");
  return *it;
}

std::string require_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

Rational require_rational(const Json& j, const std::string& what) {
  return Rational::parse(require_string(j, what));
}

long require_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<long>();
}

bool require_bool(const Json& j, const std::string& what) {
  if (!j.is_boolean()) throw ParseError(what + " must be a boolean");
  return j.get<bool>();
}

const Json& require_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  return j;
}

Json rational_or_null(const std::optional<Rational>& x) {
  return x ? Json(x->str()) : Json(nullptr);
}

}  // namespace

Json config_to_json(const CurveConfig& config) {
  Json j;
  j["name"] = config.name;
  j["smooth_model"] = config.smooth_model;
  j["curves"] = config.curves;
  Json form = Json::array();
  for (Eigen::Index i = 0; i < config.form.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < config.form.cols(); ++c) row.push_back(config.form(i, c).str());
    form.push_back(std::move(row));
  }
  j["form"] = std::move(form);
  Json kdeg = Json::array();
  for (Eigen::Index i = 0; i < config.kdeg.size(); ++i) kdeg.push_back(config.kdeg(i).str());
  j["kdeg"] = std::move(kdeg);
  j["k_self"] = rational_or_null(config.k_self);
  return j;
}

CurveConfig config_from_json(const Json& j) {
  check_keys(j, {"name", "smooth_model", "curves", "form", "kdeg", "k_self"}, "configuration");
  CurveConfig config;
  config.name = require_string(require_key(j, "name", "configuration"), "configuration name");
  config.smooth_model =
      require_bool(require_key(j, "smooth_model", "configuration"), "smooth_model");
  for (const Json& c : require_array(require_key(j, "curves", "configuration"), "curves")) {
    config.curves.push_back(require_string(c, "curve id"));
  }

  const Json& form = require_array(require_key(j, "form", "configuration"), "form");
  const Eigen::Index rows = static_cast<Eigen::Index>(form.size());
  Eigen::Index cols = 0;
  for (size_t r = 0; r < form.size(); ++r) {
    const Json& row = require_array(form[r], "form row");
    if (r == 0) {
      cols = static_cast<Eigen::Index>(row.size());
      config.form = QMatrix(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("form rows have unequal lengths");
    }
    for (size_t c = 0; c < row.size(); ++c) {
      config.form(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          require_rational(row[c], "form entry");
    }
  }
  if (rows == 0) config.form = QMatrix(0, 0);

  const Json& kdeg = require_array(require_key(j, "kdeg", "configuration"), "kdeg");
  config.kdeg = QVector(static_cast<Eigen::Index>(kdeg.size()));
  for (size_t i = 0; i < kdeg.size(); ++i) {
    config.kdeg(static_cast<Eigen::Index>(i)) = require_rational(kdeg[i], "kdeg entry");
  }

  const Json& k_self = require_key(j, "k_self", "configuration");
  if (!k_self.is_null()) config.k_self = require_rational(k_self, "k_self");
  return config;
}

Json boundary_to_json(const OrbifoldDivisor& delta) {
  Json comps = Json::array();
  for (const auto& [id, coeff] : delta.components) {
    Json c;
    c["curve"] = id;
    if (coeff.kind == BoundaryCoeff::Kind::kMult) {
      c["m"] = coeff.mult;
    } else {
      c["d"] = coeff.frac.str();
    }
    comps.push_back(std::move(c));
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

OrbifoldDivisor boundary_from_json(const Json& j) {
  check_keys(j, {"components"}, "boundary");
  OrbifoldDivisor delta;
  for (const Json& c :
       require_array(require_key(j, "components", "boundary"), "boundary components")) {
    check_keys(c, {"curve", "m", "d"}, "boundary component");
    const std::string id = require_string(require_key(c, "curve", "boundary component"), "curve");
    if (delta.components.count(id)) throw ParseError("duplicate boundary component '" + id + "'");
    const bool has_m = c.contains("m");
    const bool has_d = c.contains("d");
    if (has_m == has_d) {
      throw ParseError("boundary component '" + id + "' needs exactly one of 'm' or 'd'");
    }
    if (has_m) {
      delta.set_mult(id, require_integer(c["m"], "boundary multiplicity"));
    } else {
      delta.set_frac(id, require_rational(c["d"], "boundary coefficient"));
    }
  }
  return delta;
}

Json bspec_to_json(const BDivisorSpec& spec) {
  Json j;
  j["base_ram"] = Json::object();
  for (const auto& [id, r] : spec.base_ram) j["base_ram"][id] = r;
  j["exceptional_ram"] = Json::object();
  for (const auto& [addr, r] : spec.exceptional_ram) j["exceptional_ram"][addr] = r;
  j["default_ram"] = spec.default_ram;
  return j;
}

BDivisorSpec bspec_from_json(const Json& j) {
  check_keys(j, {"base_ram", "exceptional_ram", "default_ram"}, "b-divisor spec");
  BDivisorSpec spec;
  const Json& base = require_key(j, "base_ram", "b-divisor spec");
  if (!base.is_object()) throw ParseError("base_ram must be an object");
  for (const auto& [id, r] : base.items()) {
    spec.base_ram[id] = require_integer(r, "base ramification index");
  }
  const Json& exc = require_key(j, "exceptional_ram", "b-divisor spec");
  if (!exc.is_object()) throw ParseError("exceptional_ram must be an object");
  for (const auto& [addr, r] : exc.items()) {
    spec.exceptional_ram[addr] = require_integer(r, "exceptional ramification index");
  }
  spec.default_ram = require_integer(require_key(j, "default_ram", "b-divisor spec"), "default_ram");
  return spec;
}

Json validation_to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid;
  j["violations"] = report.violations;
  return j;
}

Json pair_degree_to_json(const PairDegreeReport& report) {
  Json j;
  j["e_self"] = report.e_self.str();
  j["k_deg"] = report.k_deg.str();
  j["pair_deg"] = report.pair_deg.str();
  j["delta_deg"] = report.delta_deg.str();
  j["delta_prime_deg"] = report.delta_prime_deg.str();
  j["ceil_count"] = report.ceil_count.str();
  return j;
}

Json classification_to_json(const CurveClassification& c) {
  Json j;
  switch (c.case_tag) {
    case CurveClassification::CaseTag::kPreconditionFailed:
      j["case"] = "PreconditionFailed";
      break;
    case CurveClassification::CaseTag::kCase1MinusOne:
      j["case"] = "Case1MinusOne";
      break;
    case CurveClassification::CaseTag::kCase2:
      j["case"] = "Case2";
      break;
  }
  j["e"] = c.e;
  j["genus"] = c.genus.str();
  j["report"] = pair_degree_to_json(c.report);
  j["ceil_count"] = c.ceil_count.str();
  j["platonic"] = c.platonic ? Json({(*c.platonic)[0], (*c.platonic)[1], (*c.platonic)[2]})
                             : Json(nullptr);
  j["minus_one_certified"] = c.minus_one_certified;
  j["minus_one_witness"] =
      c.minus_one_witness ? Json({c.minus_one_witness->first, c.minus_one_witness->second})
                          : Json(nullptr);
  j["remark_lower_bound"] = rational_or_null(c.remark_lower_bound);
  j["verdict"] = c.verdict;
  return j;
}

Json contraction_to_json(const ContractionVerdict& v) {
  Json j;
  j["negative_definite"] = v.negative_definite;
  Json cycle = Json::object();
  for (const auto& [id, c] : v.fundamental_cycle) cycle[id] = c;
  j["fundamental_cycle"] = std::move(cycle);
  j["fundamental_genus"] = rational_or_null(v.fundamental_genus);
  j["cycles_checked"] = v.cycles_checked;
  j["max_cycle_genus"] = rational_or_null(v.max_cycle_genus);
  j["contractible"] = v.contractible;
  j["bound_multiplier"] = v.bound_multiplier;
  j["genus_superadditivity"] = "p_a(Z1 + Z2) = p_a(Z1) + p_a(Z2) + Z1.Z2 - 1";
  return j;
}

Json tower_node_to_json(const TowerNode& node) {
  Json j;
  j["address"] = node.address;
  j["depth"] = node.depth;
  j["a"] = node.a.str();
  j["r"] = rational_or_null(node.r);
  j["b"] = rational_or_null(node.b);
  j["b_prime"] = rational_or_null(node.b_prime);
  return j;
}

Json pair_class_to_json(const PairClass& pc) {
  Json j;
  j["kind"] = pc.kind;
  j["inf"] = pc.infimum.str();
  j["neg_infinity"] = pc.infimum.neg_infinity;
  j["search_depth"] = pc.search_depth;
  if (pc.kind == "b-pair") {
    j["b_terminal"] = pc.terminal;
    j["b_canonical"] = pc.canonical;
    j["b_lt"] = pc.log_terminal;
    j["b_lc"] = pc.log_canonical;
  } else {
    j["terminal"] = pc.terminal;
    j["canonical"] = pc.canonical;
    j["klt"] = pc.log_terminal;
    j["lc"] = pc.log_canonical;
    if (pc.eps) {
      j["epsilon"] = pc.eps->epsilon.str();
      j["eps_terminal"] = pc.eps->eps_terminal;
      j["eps_canonical"] = pc.eps->eps_canonical;
      j["eps_plt"] = pc.eps->eps_plt;
      j["eps_lc"] = pc.eps->eps_lc;
      j["eps_klt"] = pc.eps->eps_klt;
    }
  }
  j["note"] = "verdict relative to the search depth; exact for lc SNC pairs";
  return j;
}

Json step_to_json(const StepOutcome& s) {
  Json j;
  switch (s.kind) {
    case StepOutcome::Kind::kContractedDivisorial:
      j["kind"] = "contracted-divisorial";
      break;
    case StepOutcome::Kind::kFiberCase:
      j["kind"] = "fiber-case";
      break;
    case StepOutcome::Kind::kPlaneCase:
      j["kind"] = "plane-case";
      break;
    case StepOutcome::Kind::kNoListedViolation:
      j["kind"] = "no-listed-violation";
      break;
  }
  j["curve"] = s.curve ? Json(*s.curve) : Json(nullptr);
  j["report"] = s.report ? pair_degree_to_json(*s.report) : Json(nullptr);
  j["classification"] = s.classification ? classification_to_json(*s.classification) : Json(nullptr);
  j["next_config"] = s.next_config ? config_to_json(*s.next_config) : Json(nullptr);
  j["next_delta"] = s.next_delta ? boundary_to_json(*s.next_delta) : Json(nullptr);
  return j;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

namespace {

CurveConfig make_config(std::string name, std::vector<CurveId> curves,
                        std::vector<std::vector<long>> form, std::vector<long> kdeg,
                        std::optional<long> k_self) {
  CurveConfig config;
  config.name = std::move(name);
  config.smooth_model = true;
  config.curves = std::move(curves);
  const Eigen::Index n = static_cast<Eigen::Index>(config.curves.size());
  config.form = QMatrix(n, n);
  config.kdeg = QVector(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      config.form(i, j) = Rational(form[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    config.kdeg(i) = Rational(kdeg[static_cast<size_t>(i)]);
  }
  if (k_self) config.k_self = Rational(*k_self);
  return config;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"p2", "p2-blowup", "quadric", "a2", "d4", "platonic235"};
}

ProblemBundle fixture_bundle(const std::string& name) {
  ProblemBundle bundle;
  if (name == "p2") {
    bundle.config = make_config("p2", {"H"}, {{1}}, {-3}, 9);
  } else if (name == "p2-blowup") {
    bundle.config = make_config("p2-blowup", {"H", "E1"}, {{1, 0}, {0, -1}}, {-3, -1}, 8);
  } else if (name == "quadric") {
    bundle.config = make_config("quadric", {"F1", "F2"}, {{0, 1}, {1, 0}}, {-2, -2}, 8);
  } else if (name == "a2") {
    bundle.config = make_config("a2", {"C1", "C2"}, {{-2, 1}, {1, -2}}, {0, 0}, std::nullopt);
  } else if (name == "d4") {
    bundle.config = make_config("d4", {"C0", "C1", "C2", "C3"},
                                {{-2, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}},
                                {0, 0, 0, 0}, std::nullopt);
  } else if (name == "platonic235") {
    bundle.config = make_config("platonic235", {"E", "A", "B", "C"},
                                {{-1, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}},
                                {-1, 0, 0, 0}, std::nullopt);
    OrbifoldDivisor delta;
    delta.set_mult("E", 31);
    delta.set_mult("A", 2);
    delta.set_mult("B", 3);
    delta.set_mult("C", 5);
    bundle.delta = std::move(delta);
  } else {
    throw ValidationError("unknown fixture '" + name + "'");
  }
  return bundle;
}

ProblemBundle load_bundle(const BundleSources& sources, const Options& options,
                          bool enforce_config_invariants) {
  if (sources.fixture.has_value() == sources.surface_path.has_value()) {
    throw ValidationError("exactly one of a fixture name or a surface file is required");
  }

  ProblemBundle bundle;
  if (sources.fixture) {
    bundle = fixture_bundle(*sources.fixture);
  } else {
    bundle.config = config_from_json(load_json_file(*sources.surface_path));
  }
  if (sources.boundary_path) {
    bundle.delta = boundary_from_json(load_json_file(*sources.boundary_path));
  }
  if (sources.bdiv_path) {
    bundle.bdiv = bspec_from_json(load_json_file(*sources.bdiv_path));
  }
  bundle.options = options;

  if (options.depth < 1) throw ValidationError("depth must be at least 1");
  if (options.epsilon.sign() <= 0) throw ValidationError("epsilon must be positive");
  if (options.bound_multiplier < 1) throw ValidationError("bound multiplier must be at least 1");
  if (options.max_steps < 0) throw ValidationError("max-steps must be nonnegative");

  if (enforce_config_invariants) {
    const ValidationReport report = validate(bundle.config);
    if (!report.valid) {
      std::string msg = "configuration invariants violated:";
      for (const std::string& v : report.violations) msg += "\n  - " + v;
      throw ValidationError(msg);
    }
    if (bundle.delta) {
      for (const auto& [id, coeff] : bundle.delta->components) {
        if (!bundle.config.find(id)) {
          throw ValidationError("boundary references unknown curve '" + id + "'");
        }
      }
    }
    if (bundle.bdiv) {
      for (const auto& [id, r] : bundle.bdiv->base_ram) {
        if (!bundle.config.find(id)) {
          throw ValidationError("b-divisor spec references unknown curve '" + id + "'");
        }
      }
    }
    for (const CurveId& id : options.support) bundle.config.index_of(id);
    if (options.curve) bundle.config.index_of(*options.curve);
  }
  return bundle;
}

namespace {

void emit_tower_file(const std::string& path, const std::vector<TowerNode>& nodes) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write tower report to '" + path + "'");
  for (const TowerNode& node : nodes) out << tower_node_to_json(node).dump() << "\n";
}

}  // namespace

int run_command(const ProblemBundle& bundle, const std::string& command, std::ostream& out) {
  const OrbifoldDivisor delta = bundle.delta.value_or(OrbifoldDivisor::empty());
  const Options& opt = bundle.options;

  if (command == "validate") {
    ValidationReport report = validate(bundle.config);
    if (bundle.delta) {
      for (const auto& [id, coeff] : bundle.delta->components) {
        if (!bundle.config.find(id)) {
          report.valid = false;
          report.violations.push_back("boundary references unknown curve '" + id + "'");
        }
      }
    }
    out << dump_pretty(validation_to_json(report));
    return 0;
  }
  if (command == "classify-curve") {
    if (!opt.curve) throw ValidationError("classify-curve needs --curve");
    out << dump_pretty(classification_to_json(classify_negative_curve(bundle.config, delta, *opt.curve)));
    return 0;
  }
  if (command == "artin-test") {
    const std::vector<CurveId> support = opt.support.empty() ? bundle.config.curves : opt.support;
    out << dump_pretty(contraction_to_json(artin_test(bundle.config, support, opt.bound_multiplier)));
    return 0;
  }
  if (command == "discrep") {
    const std::vector<TowerNode> nodes = tower_discrepancies(bundle.config, delta, opt.depth);
    if (opt.emit_tower) emit_tower_file(*opt.emit_tower, nodes);
    Rational min = nodes.front().a;
    for (const TowerNode& node : nodes) min = std::min(min, node.a);
    Discrep inf;
    inf.value = min;
    inf.neg_infinity = min < Rational(-1);
    Json j;
    j["inf"] = inf.str();
    j["neg_infinity"] = inf.neg_infinity;
    j["search_depth"] = opt.depth;
    j["node_count"] = nodes.size();
    j["snc_closed_form"] = snc_closed_form(bundle.config, delta).str();
    out << dump_pretty(j);
    return 0;
  }
  if (command == "b-discrep") {
    if (!bundle.bdiv) throw ValidationError("b-discrep needs --bdiv");
    const std::vector<TowerNode> nodes = b_tower(bundle.config, *bundle.bdiv, opt.depth);
    if (opt.emit_tower) emit_tower_file(*opt.emit_tower, nodes);
    Rational min = *nodes.front().b;
    for (const TowerNode& node : nodes) min = std::min(min, *node.b);
    Json j;
    j["inf"] = min < Rational(-1) ? "-inf" : min.str();
    j["neg_infinity"] = min < Rational(-1);
    j["search_depth"] = opt.depth;
    j["node_count"] = nodes.size();
    out << dump_pretty(j);
    return 0;
  }
  if (command == "classify-pair") {
    if (bundle.bdiv && !bundle.delta) {
      out << dump_pretty(pair_class_to_json(classify_b_pair(bundle.config, *bundle.bdiv, opt.depth)));
    } else {
      out << dump_pretty(
          pair_class_to_json(classify_pair(bundle.config, delta, opt.epsilon, opt.depth)));
    }
    return 0;
  }
  if (command == "mmp-run") {
    for (const StepOutcome& s : mmp_run(bundle.config, delta, opt.max_steps)) {
      out << step_to_json(s).dump() << "\n";
    }
    return 0;
  }
  throw UnknownCommand("unknown command '" + command + "'");
}

}  // namespace orbsurf

#include "orbsurf/discrepancy.hpp"

#include <algorithm>

#include "orbsurf/errors.hpp"

namespace orbsurf {

namespace {

struct Tracked {
  std::string name;
  Rational coeff;
};

// Enumeration state: tracked curves and their pairwise transversal
// intersection counts. Self-intersections play no role in the recursion.
struct TowerState {
  std::vector<Tracked> curves;
  std::vector<std::vector<long>> meet;
  int exceptional_count = 0;

  long& meet_at(size_t i, size_t j) { return meet[i][j]; }
};

TowerState initial_state(const CurveConfig& config, const OrbifoldDivisor& delta) {
  TowerState state;
  std::vector<Eigen::Index> picked;
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    const Rational d = delta.coefficient(config.curves[i]);
    if (d.sign() > 0) {
      state.curves.push_back({config.curves[i], d});
      picked.push_back(i);
    }
  }
  const size_t n = state.curves.size();
  state.meet.assign(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const Rational& meet = config.form(picked[i], picked[j]);
      if (!meet.is_integer() || meet.sign() < 0) {
        throw ValidationError("boundary is not SNC: " + state.curves[i].name + " . " +
                              state.curves[j].name + " = " + meet.str() +
                              " is not a nonnegative integer");
      }
      state.meet[i][j] = state.meet[j][i] = meet.to_long();
    }
  }
  return state;
}

void enumerate_tower(const TowerState& state, const std::string& prefix, int depth, int max_depth,
                     std::vector<TowerNode>& out) {
  const size_t n = state.curves.size();

  auto emit = [&](const std::string& step, const Rational& a, const std::vector<size_t>& through) {
    TowerNode node;
    node.address = prefix.empty() ? step : prefix + ";" + step;
    node.depth = depth;
    node.a = a;
    out.push_back(node);
    if (depth < max_depth) {
      TowerState next = state;
      const std::string exc_name = "@" + std::to_string(state.exceptional_count + 1);
      next.exceptional_count = state.exceptional_count + 1;
      next.curves.push_back({exc_name, -a});
      for (auto& row : next.meet) row.push_back(0);
      next.meet.emplace_back(n + 1, 0);
      for (size_t t : through) {
        next.meet_at(t, n) = 1;
        next.meet_at(n, t) = 1;
      }
      if (through.size() == 2) {
        next.meet_at(through[0], through[1]) -= 1;
        next.meet_at(through[1], through[0]) -= 1;
      }
      enumerate_tower(next, node.address, depth + 1, max_depth, out);
    }
  };

  emit("*", Rational(1), {});
  for (size_t i = 0; i < n; ++i) {
    emit(state.curves[i].name, Rational(1) - state.curves[i].coeff, {i});
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const long points = state.meet[i][j];
      const Rational a = Rational(1) - state.curves[i].coeff - state.curves[j].coeff;
      for (long k = 0; k < points; ++k) {
        emit(state.curves[i].name + "^" + state.curves[j].name + "#" + std::to_string(k), a,
             {i, j});
      }
    }
  }
}

void check_depth(int depth) {
  if (depth < 1) throw ValidationError("tower depth must be at least 1");
  if (depth > kMaxTowerDepth) {
    throw DepthTooLarge("tower depth " + std::to_string(depth) + " exceeds the cap " +
                        std::to_string(kMaxTowerDepth));
  }
}

Rational min_a(const std::vector<TowerNode>& nodes) {
  Rational m = nodes.front().a;
  for (const TowerNode& node : nodes) m = std::min(m, node.a);
  return m;
}

PairClass threshold(const Discrep& inf, int depth) {
  PairClass pc;
  pc.infimum = inf;
  pc.search_depth = depth;
  if (!inf.neg_infinity) {
    pc.terminal = inf.value > Rational(0);
    pc.canonical = inf.value >= Rational(0);
    pc.log_terminal = inf.value > Rational(-1);
    pc.log_canonical = inf.value >= Rational(-1);
  }
  return pc;
}

}  // namespace

std::vector<TowerNode> tower_discrepancies(const CurveConfig& config, const OrbifoldDivisor& delta,
                                           int depth) {
  if (!config.smooth_model) {
    throw NotSmoothModel("tower_discrepancies: configuration is not a smooth model");
  }
  check_depth(depth);
  require_components_exist(config, delta);

  std::vector<TowerNode> out;
  enumerate_tower(initial_state(config, delta), "", 1, depth, out);
  std::sort(out.begin(), out.end(), [](const TowerNode& x, const TowerNode& y) {
    if (x.depth != y.depth) return x.depth < y.depth;
    return x.address < y.address;
  });
  return out;
}

Discrep discrep_estimate(const CurveConfig& config, const OrbifoldDivisor& delta, int depth) {
  const std::vector<TowerNode> nodes = tower_discrepancies(config, delta, depth);
  Discrep d;
  d.value = min_a(nodes);
  d.neg_infinity = d.value < Rational(-1);
  return d;
}

Rational snc_closed_form(const CurveConfig& config, const OrbifoldDivisor& delta) {
  if (!config.smooth_model) {
    throw NotSmoothModel("snc_closed_form: configuration is not a smooth model");
  }
  require_components_exist(config, delta);

  Rational m(1);
  std::vector<std::pair<Eigen::Index, Rational>> comps;
  for (const auto& [id, coeff] : delta.components) {
    const Rational d = coeff.value();
    if (d.sign() > 0) comps.emplace_back(config.index_of(id), d);
  }
  for (const auto& [i, d] : comps) m = std::min(m, Rational(1) - d);
  for (size_t x = 0; x < comps.size(); ++x) {
    for (size_t y = x + 1; y < comps.size(); ++y) {
      if (config.form(comps[x].first, comps[y].first).sign() > 0) {
        m = std::min(m, Rational(1) - comps[x].second - comps[y].second);
      }
    }
  }
  return m;
}

OrbifoldDivisor boundary_from_bspec(const CurveConfig& config, const BDivisorSpec& spec) {
  if (spec.default_ram < 1) {
    throw BadRamification("default ramification index " + std::to_string(spec.default_ram) +
                          " is below 1");
  }
  for (const auto& [id, r] : spec.base_ram) {
    config.index_of(id);
    if (r < 1) throw BadRamification("ramification index " + std::to_string(r) + " on curve '" +
                                     id + "' is below 1");
  }
  for (const auto& [addr, r] : spec.exceptional_ram) {
    if (r < 1) throw BadRamification("ramification index " + std::to_string(r) + " at address '" +
                                     addr + "' is below 1");
  }
  OrbifoldDivisor delta;
  for (const CurveId& id : config.curves) {
    auto it = spec.base_ram.find(id);
    const long r = it == spec.base_ram.end() ? spec.default_ram : it->second;
    delta.set_mult(id, r);
  }
  return delta;
}

std::vector<TowerNode> b_tower(const CurveConfig& config, const BDivisorSpec& spec, int depth) {
  const OrbifoldDivisor delta = boundary_from_bspec(config, spec);
  std::vector<TowerNode> nodes = tower_discrepancies(config, delta, depth);
  for (TowerNode& node : nodes) {
    auto it = spec.exceptional_ram.find(node.address);
    const long r = it == spec.exceptional_ram.end() ? spec.default_ram : it->second;
    const Rational rr(r);
    node.r = rr;
    node.b = rr * (node.a + Rational(1)) - Rational(1);
    node.b_prime = *node.b / rr;
  }
  return nodes;
}

PairClass classify_pair(const CurveConfig& config, const OrbifoldDivisor& delta,
                        const Rational& epsilon, int depth) {
  if (epsilon.sign() <= 0) throw ValidationError("epsilon must be positive");
  const Discrep inf = discrep_estimate(config, delta, depth);

  PairClass pc = threshold(inf, depth);
  pc.kind = "pair";

  bool floor_nonpositive = true;
  const QVector fl = round_down(config, delta);
  for (Eigen::Index i = 0; i < fl.size(); ++i) {
    if (fl(i).sign() > 0) floor_nonpositive = false;
  }
  pc.log_terminal = pc.log_terminal && floor_nonpositive;  // klt

  EpsilonFlags ef;
  ef.epsilon = epsilon;
  if (!inf.neg_infinity) {
    ef.eps_terminal = inf.value > epsilon;
    ef.eps_canonical = inf.value >= epsilon;
    ef.eps_plt = inf.value > epsilon - Rational(1);
    ef.eps_lc = inf.value >= epsilon - Rational(1);
    ef.eps_klt = ef.eps_plt && floor_nonpositive;
  }
  pc.eps = ef;
  return pc;
}

PairClass classify_b_pair(const CurveConfig& config, const BDivisorSpec& spec, int depth) {
  const std::vector<TowerNode> nodes = b_tower(config, spec, depth);
  Discrep inf;
  inf.value = *nodes.front().b;
  for (const TowerNode& node : nodes) inf.value = std::min(inf.value, *node.b);
  inf.neg_infinity = inf.value < Rational(-1);

  PairClass pc = threshold(inf, depth);
  pc.kind = "b-pair";
  return pc;
}

BoundComparisonReport compare_discrepancy_bounds(const Rational& a, const Rational& r,
                                                 const Rational& epsilon,
                                                 const Rational& delta_param) {
  BoundComparisonReport rep;
  rep.b = r * (a + Rational(1)) - Rational(1);
  rep.b_prime = rep.b / r;
  const Rational ed = epsilon + delta_param;

  auto fill = [&](bool strict) {
    auto above = [strict](const Rational& x, const Rational& bound) {
      return strict ? x > bound : x >= bound;
    };
    BoundPropagation from_b;
    from_b.hypothesis = above(rep.b, ed);
    from_b.first_conclusion = above(rep.b_prime, ed / r);
    from_b.second_conclusion = above(a, (ed + Rational(1)) / r - Rational(1));
    from_b.consistent = !from_b.hypothesis || (from_b.first_conclusion && from_b.second_conclusion);
    BoundPropagation from_a;
    from_a.hypothesis = above(a, ed);
    from_a.first_conclusion = above(rep.b, r * (ed + Rational(1)) - Rational(1));
    from_a.second_conclusion = above(rep.b_prime, ed + Rational(1) - Rational(1) / r);
    from_a.consistent = !from_a.hypothesis || (from_a.first_conclusion && from_a.second_conclusion);
    return std::make_pair(from_b, from_a);
  };

  std::tie(rep.from_b_strict, rep.from_a_strict) = fill(true);
  std::tie(rep.from_b_weak, rep.from_a_weak) = fill(false);
  rep.all_consistent = rep.from_b_strict.consistent && rep.from_a_strict.consistent &&
                       rep.from_b_weak.consistent && rep.from_a_weak.consistent;
  return rep;
}

}  // namespace orbsurf

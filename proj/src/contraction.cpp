#include "orbsurf/contraction.hpp"

#include <algorithm>
#include <set>

#include "orbsurf/errors.hpp"

namespace orbsurf {

namespace {

std::vector<Eigen::Index> support_indices(const CurveConfig& config,
                                          const std::vector<CurveId>& support) {
  if (support.empty()) throw ValidationError("empty support set");
  std::vector<Eigen::Index> idx;
  std::set<Eigen::Index> seen;
  for (const CurveId& id : support) {
    const Eigen::Index i = config.index_of(id);
    if (seen.insert(i).second) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

QMatrix restrict_form(const CurveConfig& config, const std::vector<Eigen::Index>& idx) {
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  QMatrix block(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) block(i, j) = config.form(idx[i], idx[j]);
  }
  return block;
}

constexpr long kLauferIterationCap = 1000000;

}  // namespace

Cycle fundamental_cycle(const CurveConfig& config, const std::vector<CurveId>& support) {
  const std::vector<Eigen::Index> idx = support_indices(config, support);
  if (!is_negative_definite(restrict_form(config, idx))) {
    throw NotNegativeDefinite("fundamental_cycle: support is not negative definite");
  }

  QVector z = config.zero_class();
  for (Eigen::Index i : idx) z(i) = Rational(1);

  for (long step = 0;; ++step) {
    if (step > kLauferIterationCap) {
      throw Error("fundamental_cycle: iteration cap exceeded");  // unreachable: block is definite
    }
    Eigen::Index bump = -1;
    for (Eigen::Index i : idx) {
      Rational pairing;
      for (Eigen::Index c = 0; c < config.size(); ++c) {
        if (!z(c).is_zero()) pairing += config.form(i, c) * z(c);
      }
      if (pairing.sign() > 0) {
        bump = i;
        break;
      }
    }
    if (bump < 0) break;
    z(bump) += Rational(1);
  }

  Cycle cycle;
  for (Eigen::Index i : idx) cycle[config.curves[i]] = z(i).to_long();
  return cycle;
}

ContractionVerdict artin_test(const CurveConfig& config, const std::vector<CurveId>& support,
                              long bound_multiplier) {
  if (bound_multiplier < 1) throw ValidationError("bound multiplier must be at least 1");
  const std::vector<Eigen::Index> idx = support_indices(config, support);

  ContractionVerdict verdict;
  verdict.bound_multiplier = bound_multiplier;
  try {
    verdict.negative_definite = is_negative_definite(restrict_form(config, idx));
  } catch (const NotSymmetric&) {
    verdict.negative_definite = false;
  }
  if (!verdict.negative_definite) return verdict;

  std::vector<CurveId> names;
  for (Eigen::Index i : idx) names.push_back(config.curves[i]);
  verdict.fundamental_cycle = fundamental_cycle(config, names);

  QVector zf = config.zero_class();
  for (const auto& [id, c] : verdict.fundamental_cycle) zf(config.index_of(id)) = Rational(c);
  verdict.fundamental_genus = arithmetic_genus(config, zf);

  // Enumerate 0 < Z <= bound * Z_f componentwise, updating Z.Z and K.Z
  // incrementally as the odometer moves one coordinate at a time.
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  const QMatrix block = restrict_form(config, idx);
  std::vector<long> limits;
  double estimated = 1.0;
  for (Eigen::Index i : idx) {
    limits.push_back(bound_multiplier * zf(i).to_long());
    estimated *= static_cast<double>(limits.back()) + 1.0;
  }
  if (estimated > 2e7) {
    throw ValidationError("artin_test: cycle enumeration above 2e7 entries; lower the bound "
                          "multiplier");
  }

  std::vector<long> counter(idx.size(), 0);
  QVector paired(m);
  paired.setZero();
  Rational self, kdeg;
  auto bump = [&](Eigen::Index j, long d) {
    const Rational dr(d);
    self += Rational(2) * dr * paired(j) + dr * dr * block(j, j);
    kdeg += dr * config.kdeg(idx[static_cast<size_t>(j)]);
    for (Eigen::Index r = 0; r < m; ++r) paired(r) += dr * block(r, j);
  };

  Rational worst;
  bool first = true;
  for (;;) {
    size_t pos = 0;
    while (pos < counter.size() && counter[pos] == limits[pos]) {
      bump(static_cast<Eigen::Index>(pos), -counter[pos]);
      counter[pos] = 0;
      ++pos;
    }
    if (pos == counter.size()) break;
    counter[pos] += 1;
    bump(static_cast<Eigen::Index>(pos), 1);

    const Rational genus = (self + kdeg) / Rational(2) + Rational(1);
    if (first || genus > worst) worst = genus;
    first = false;
    verdict.cycles_checked += 1;
  }
  verdict.max_cycle_genus = worst;
  verdict.contractible = worst <= Rational(0);
  return verdict;
}

std::optional<std::array<long, 3>> platonic_check(std::vector<long> multiset) {
  if (multiset.size() != 3) return std::nullopt;
  std::sort(multiset.begin(), multiset.end());
  if (multiset[0] < 2) return std::nullopt;
  Rational harmonic;
  for (long m : multiset) harmonic += Rational(1, m);
  if (harmonic <= Rational(1)) return std::nullopt;
  return std::array<long, 3>{multiset[0], multiset[1], multiset[2]};
}

namespace {

// E.Delta' = 2 - 1/(em) - 1/(en) over positive integers m <= n. Writing
// s = 2 - E.Delta', any solution has 1/(em) >= s/2, so m <= 2/(es).
std::optional<std::pair<long, long>> minus_one_witness_search(long e, const Rational& prime_deg) {
  const Rational s = Rational(2) - prime_deg;
  if (s.sign() <= 0) return std::nullopt;
  const Rational er(e);
  const long m_max = (Rational(2) / (er * s)).floor_long();
  for (long m = 1; m <= m_max; ++m) {
    const Rational rem = s - Rational(1) / (er * Rational(m));
    if (rem.sign() <= 0) continue;
    const Rational n = Rational(1) / (er * rem);
    if (n.is_integer() && n.sign() > 0) return std::make_pair(m, n.to_long());
  }
  return std::nullopt;
}

}  // namespace

CurveClassification classify_negative_curve(const CurveConfig& config,
                                            const OrbifoldDivisor& delta, const CurveId& e) {
  const Eigen::Index ei = config.index_of(e);
  require_components_exist(config, delta);

  CurveClassification out;
  out.report = pair_degree(config, delta, e);
  out.ceil_count = out.report.ceil_count;
  out.genus = arithmetic_genus(config, config.unit_class(e));

  if (!config.smooth_model) {
    throw InconsistentInput("classify_negative_curve: model is not flagged smooth along " + e);
  }
  if (!delta.is_strict_orbifold()) {
    throw InconsistentInput(
        "classify_negative_curve: boundary has a non-integer ramification index");
  }
  const auto e_comp = delta.components.find(e);
  if (e_comp != delta.components.end() && e_comp->second.value().sign() > 0) {
    out.e = *e_comp->second.integer_ram();
  }

  if (out.report.e_self.sign() >= 0 || out.report.pair_deg.sign() >= 0) {
    out.case_tag = CurveClassification::CaseTag::kPreconditionFailed;
    out.verdict = "preconditions E^2 < 0 and (K + Delta).E < 0 do not both hold";
    return out;
  }

  // Consequence checks; a violation means no orbifold surface pair can carry
  // this configuration.
  if (!out.report.e_self.is_integer() || !out.report.k_deg.is_integer()) {
    throw InconsistentInput("classify_negative_curve: E^2 and K.E must be integers for a Cartier "
                            "curve on a Gorenstein model");
  }
  for (const auto& [id, coeff] : delta.components) {
    if (id == e || coeff.value().sign() <= 0) continue;
    const Rational meet = config.form(config.index_of(id), ei);
    if (!meet.is_integer() || meet.sign() < 0) {
      throw InconsistentInput("classify_negative_curve: boundary component '" + id +
                              "' meets E in " + meet.str() + " points; SNC requires a "
                              "nonnegative integer");
    }
  }
  if (!out.genus.is_zero()) {
    throw InconsistentInput("classify_negative_curve: p_a(E) = " + out.genus.str() +
                            ", but the hypotheses force p_a(E) = 0");
  }

  const bool on_boundary = delta.supports(e);
  if (!on_boundary) {
    if (out.report.e_self != Rational(-1) || out.report.k_deg != Rational(-1)) {
      throw InconsistentInput("classify_negative_curve: E off the boundary must satisfy E^2 = "
                              "K.E = -1, got E^2 = " + out.report.e_self.str() + ", K.E = " +
                              out.report.k_deg.str());
    }
    if (out.report.delta_deg >= Rational(1)) {
      throw InconsistentInput("classify_negative_curve: E.Delta = " + out.report.delta_deg.str() +
                              " must be below 1");
    }
    out.case_tag = CurveClassification::CaseTag::kCase1MinusOne;
    out.e = 1;
    out.minus_one_certified = true;
    out.verdict = "minus-one curve (not a boundary component)";
    return out;
  }

  out.case_tag = CurveClassification::CaseTag::kCase2;
  out.remark_lower_bound = Rational(out.e) * (out.report.delta_prime_deg - Rational(2));
  if (out.ceil_count > Rational(3)) {
    throw InconsistentInput("classify_negative_curve: E.ceil(Delta') = " + out.ceil_count.str() +
                            " exceeds 3");
  }

  if (out.ceil_count == Rational(3)) {
    std::vector<long> multiset;
    for (const auto& [id, coeff] : delta.components) {
      if (id == e || coeff.value().sign() <= 0) continue;
      const long meet = config.form(config.index_of(id), ei).to_long();
      for (long k = 0; k < meet; ++k) multiset.push_back(*coeff.integer_ram());
    }
    out.platonic = platonic_check(multiset);
    if (!out.platonic) {
      throw InconsistentInput(
          "classify_negative_curve: three boundary branches without a Platonic triple");
    }
    out.verdict = "boundary component meeting three branches with Platonic multiplicities";
    return out;
  }

  out.minus_one_witness = minus_one_witness_search(out.e, out.report.delta_prime_deg);
  if (out.minus_one_witness) {
    if (out.report.e_self != Rational(-1) || out.report.k_deg != Rational(-1)) {
      throw InconsistentInput("classify_negative_curve: certified boundary component must have "
                              "E^2 = K.E = -1, got E^2 = " + out.report.e_self.str());
    }
    out.minus_one_certified = true;
    out.verdict = "minus-one curve certified by the branch decomposition";
  } else {
    out.verdict = "inconclusive: no branch decomposition witness";
  }
  return out;
}

}  // namespace orbsurf

#include "orbsurf/mmp.hpp"

#include "orbsurf/errors.hpp"

namespace orbsurf {

std::vector<std::pair<CurveId, PairDegreeReport>> find_negative_extremal(
    const CurveConfig& config, const OrbifoldDivisor& delta) {
  require_components_exist(config, delta);
  std::vector<std::pair<CurveId, PairDegreeReport>> neg, zero, pos;
  for (const CurveId& id : config.curves) {
    PairDegreeReport report = pair_degree(config, delta, id);
    if (report.pair_deg.sign() >= 0) continue;
    const int s = report.e_self.sign();
    auto& bucket = s < 0 ? neg : (s == 0 ? zero : pos);
    bucket.emplace_back(id, std::move(report));
  }
  neg.insert(neg.end(), zero.begin(), zero.end());
  neg.insert(neg.end(), pos.begin(), pos.end());
  return neg;
}

StepOutcome mmp_step(const CurveConfig& config, const OrbifoldDivisor& delta) {
  StepOutcome outcome;
  const auto candidates = find_negative_extremal(config, delta);
  if (candidates.empty()) {
    outcome.kind = StepOutcome::Kind::kNoListedViolation;
    return outcome;
  }

  const auto& [id, report] = candidates.front();
  outcome.curve = id;
  outcome.report = report;
  if (report.e_self.sign() == 0) {
    outcome.kind = StepOutcome::Kind::kFiberCase;
    return outcome;
  }
  if (report.e_self.sign() > 0) {
    outcome.kind = StepOutcome::Kind::kPlaneCase;
    return outcome;
  }

  if (!config.smooth_model) {
    throw NotSmoothModel("mmp_step: divisorial contraction needs a smooth model");
  }
  outcome.classification = classify_negative_curve(config, delta, id);

  const ContractionVerdict artin = artin_test(config, {id});
  if (!artin.contractible) {
    // The numerical criterion guarantees contraction under its hypotheses, so
    // a negative verdict here means the input was not a surface pair at all.
    throw ContractionFailed("mmp_step: contraction criteria fail for '" + id + "'");
  }

  outcome.kind = StepOutcome::Kind::kContractedDivisorial;
  outcome.next_config = contract(config, {id});
  OrbifoldDivisor pushed = delta;
  pushed.erase(id);
  outcome.next_delta = std::move(pushed);
  return outcome;
}

std::vector<StepOutcome> mmp_run(const CurveConfig& config, const OrbifoldDivisor& delta,
                                 int max_steps) {
  if (max_steps < 0) throw ValidationError("max_steps must be nonnegative");
  std::vector<StepOutcome> trace;
  CurveConfig current = config;
  OrbifoldDivisor boundary = delta;
  for (int step = 0; step < max_steps; ++step) {
    StepOutcome outcome = mmp_step(current, boundary);
    const bool divisorial = outcome.kind == StepOutcome::Kind::kContractedDivisorial;
    if (divisorial) {
      current = *outcome.next_config;
      boundary = *outcome.next_delta;
    }
    trace.push_back(std::move(outcome));
    if (!divisorial) break;
  }
  return trace;
}

}  // namespace orbsurf

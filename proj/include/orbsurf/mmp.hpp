#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbsurf/contraction.hpp"

namespace orbsurf {

// One step of the contraction loop. Fiber and plane outcomes are reports:
// the ruling (E^2 = 0) and the plane identification (E^2 > 0) are asserted
// by the trichotomy, not constructed here. NoListedViolation only says that
// no listed curve is (K + Delta)-negative; it is not a nef certificate.
struct StepOutcome {
  enum class Kind { kContractedDivisorial, kFiberCase, kPlaneCase, kNoListedViolation };

  Kind kind = Kind::kNoListedViolation;
  std::optional<CurveId> curve;
  std::optional<PairDegreeReport> report;
  std::optional<CurveClassification> classification;
  std::optional<CurveConfig> next_config;
  std::optional<OrbifoldDivisor> next_delta;
};

// All listed curves with (K + Delta).E < 0, grouped E^2 < 0 first, then
// E^2 = 0, then E^2 > 0, declared order within each group.
std::vector<std::pair<CurveId, PairDegreeReport>> find_negative_extremal(
    const CurveConfig& config, const OrbifoldDivisor& delta);

StepOutcome mmp_step(const CurveConfig& config, const OrbifoldDivisor& delta);

// Iterate mmp_step until a terminal outcome or max_steps. Each divisorial
// step drops one curve, so traces are finite.
std::vector<StepOutcome> mmp_run(const CurveConfig& config, const OrbifoldDivisor& delta,
                                 int max_steps);

}  // namespace orbsurf

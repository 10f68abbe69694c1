#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbsurf/orbifold.hpp"

namespace orbsurf {

// Effective cycle with support on a curve set; coefficients are positive.
using Cycle = std::map<CurveId, long>;

// Verdict of the two contractibility criteria: negative definiteness of the
// intersection block, and nonpositive arithmetic genus of every effective
// cycle up to bound_multiplier times the fundamental cycle. The genus check
// is finite, so `contractible` is relative to that bound; the reported
// superadditivity identity lets callers argue beyond it.
struct ContractionVerdict {
  bool negative_definite = false;
  Cycle fundamental_cycle;
  std::optional<Rational> fundamental_genus;
  long cycles_checked = 0;
  std::optional<Rational> max_cycle_genus;
  bool contractible = false;
  long bound_multiplier = 2;
};

struct CurveClassification {
  enum class CaseTag { kPreconditionFailed, kCase1MinusOne, kCase2 };

  CaseTag case_tag = CaseTag::kPreconditionFailed;
  long e = 1;          // ramification on E; 1 when E is not a boundary component
  Rational ceil_count; // E . ceil(Delta')
  std::optional<std::array<long, 3>> platonic;
  bool minus_one_certified = false;
  PairDegreeReport report;
  Rational genus;
  std::optional<std::pair<long, long>> minus_one_witness;  // (m, n) with E.Delta' = 2 - 1/(em) - 1/(en)
  std::optional<Rational> remark_lower_bound;              // e(-2 + E.Delta') < E^2
  std::string verdict;
};

// Laufer's loop: start from the sum of the support curves and bump the
// smallest-index curve with positive pairing until Z.C_j <= 0 everywhere.
// The support block must be negative definite (also the termination guard).
Cycle fundamental_cycle(const CurveConfig& config, const std::vector<CurveId>& support);

ContractionVerdict artin_test(const CurveConfig& config, const std::vector<CurveId>& support,
                              long bound_multiplier = 2);

// Negative-curve classifier. Preconditions E^2 < 0 and (K + Delta).E < 0 are
// reported, not thrown; violated consequences (p_a(E) != 0, broken Case-1
// identities, Case-2 bound) raise InconsistentInput since no actual surface
// pair can produce them.
CurveClassification classify_negative_curve(const CurveConfig& config,
                                            const OrbifoldDivisor& delta, const CurveId& e);

// Sorted triple when the multiset has exactly three entries, all >= 2, with
// 1/a + 1/b + 1/c > 1; nullopt otherwise.
std::optional<std::array<long, 3>> platonic_check(std::vector<long> multiset);

}  // namespace orbsurf

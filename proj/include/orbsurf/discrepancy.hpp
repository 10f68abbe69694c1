#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbsurf/orbifold.hpp"

namespace orbsurf {

inline constexpr int kDefaultTowerDepth = 3;
inline constexpr int kMaxTowerDepth = 6;

// One exceptional prime divisor over the base, addressed by its blowup word.
// The word is serialized step by step, joined with ';':
//   *        blowup at a point away from every tracked curve
//   C        blowup at a point of C away from other tracked curves
//   C^D#k    blowup at the k-th intersection point of C and D
// Exceptional curves created along the word are referred to as @1, @2, ...
// in the order of creation.
struct TowerNode {
  std::string address;
  int depth = 1;
  Rational a;  // a(E; X, Delta)
  std::optional<Rational> r;        // ramification index, when a b-divisor is given
  std::optional<Rational> b;        // b + 1 = r (a + 1)
  std::optional<Rational> b_prime;  // b' = b / r
};

// Finite presentation of a b-divisor: named ramification indices on base
// curves and on exceptional addresses, plus a default applied to everything
// unnamed. All indices are integers >= 1.
struct BDivisorSpec {
  std::map<CurveId, long> base_ram;
  std::map<std::string, long> exceptional_ram;
  long default_ram = 1;
};

// Witnessed infimum; neg_infinity is set as soon as a node drops below -1
// (deeper towers then drive the infimum to minus infinity).
struct Discrep {
  bool neg_infinity = false;
  Rational value;

  std::string str() const { return neg_infinity ? "-inf" : value.str(); }
};

struct EpsilonFlags {
  Rational epsilon;
  bool eps_terminal = false;
  bool eps_canonical = false;
  bool eps_plt = false;
  bool eps_lc = false;
  bool eps_klt = false;
};

// Threshold verdicts for a pair, relative to the search depth used. For the
// b-side variant (kind == "b-pair") log_terminal means b-lt and no floor
// condition or epsilon block applies.
struct PairClass {
  std::string kind = "pair";
  Discrep infimum;
  int search_depth = kDefaultTowerDepth;
  bool terminal = false;
  bool canonical = false;
  bool log_terminal = false;  // klt for pairs, b-lt for b-pairs
  bool log_canonical = false;
  std::optional<EpsilonFlags> eps;
};

// Enumerates all blowup words of length <= depth over combinatorially
// distinct centers and returns one node per word, sorted by (depth, address).
// Tracked curves are the positive-coefficient boundary components plus every
// exceptional created along the word; a(E) = 1 - sum of tracked coefficients
// through the center, with exceptionals contributing -a(E_j).
std::vector<TowerNode> tower_discrepancies(const CurveConfig& config, const OrbifoldDivisor& delta,
                                           int depth);

Discrep discrep_estimate(const CurveConfig& config, const OrbifoldDivisor& delta, int depth);

// Independent oracle for smooth SNC pairs:
// min(1, min_i(1 - d_i), min over meeting pairs (1 - d_i - d_j)).
Rational snc_closed_form(const CurveConfig& config, const OrbifoldDivisor& delta);

// Base trace of the b-divisor: coefficient 1 - 1/r on every base curve.
OrbifoldDivisor boundary_from_bspec(const CurveConfig& config, const BDivisorSpec& spec);

// tower_discrepancies against the base trace, with r/b/b' filled per node.
std::vector<TowerNode> b_tower(const CurveConfig& config, const BDivisorSpec& spec, int depth);

PairClass classify_pair(const CurveConfig& config, const OrbifoldDivisor& delta,
                        const Rational& epsilon, int depth);

PairClass classify_b_pair(const CurveConfig& config, const BDivisorSpec& spec, int depth);

struct BoundPropagation {
  bool hypothesis = false;
  bool first_conclusion = false;
  bool second_conclusion = false;
  bool consistent = true;  // hypothesis implies both conclusions
};

// How a lower bound epsilon + delta on one discrepancy scale propagates to
// the other two, evaluated on one concrete (a, r, epsilon, delta) sample in
// strict and non-strict form, with b and b' derived from a and r.
struct BoundComparisonReport {
  Rational b;
  Rational b_prime;
  BoundPropagation from_b_strict, from_a_strict, from_b_weak, from_a_weak;
  bool all_consistent = true;
};

BoundComparisonReport compare_discrepancy_bounds(const Rational& a, const Rational& r,
                                                 const Rational& epsilon,
                                                 const Rational& delta_param);

}  // namespace orbsurf

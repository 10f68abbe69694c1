#pragma once

#include <map>
#include <optional>
#include <string>

#include "orbsurf/surface.hpp"

namespace orbsurf {

// Boundary coefficient of one component. Mult(m) means 1 - 1/m with an
// integer ramification index m >= 1; Frac(d) is an arbitrary exact d in
// [0,1) for fractional b-log traces. The two are kept distinct so that
// integer-ramification ("orbifold") boundaries are recognizable.
struct BoundaryCoeff {
  enum class Kind { kMult, kFrac };
  Kind kind = Kind::kMult;
  long mult = 1;
  Rational frac;

  static BoundaryCoeff of_mult(long m);
  static BoundaryCoeff of_frac(const Rational& d);

  Rational value() const;
  // Ramification index 1/(1 - value) when it is an integer.
  std::optional<long> integer_ram() const;
};

// Formal boundary divisor sum(coeff_i C_i), all coefficients in [0,1).
// Mult(1) components normalize away; Frac(0) components are kept but carry
// coefficient zero everywhere.
struct OrbifoldDivisor {
  std::map<CurveId, BoundaryCoeff> components;

  static OrbifoldDivisor empty() { return OrbifoldDivisor{}; }

  void set_mult(const CurveId& id, long m);
  void set_frac(const CurveId& id, const Rational& d);
  void erase(const CurveId& id) { components.erase(id); }

  Rational coefficient(const CurveId& id) const;
  // Support membership: positive coefficient.
  bool supports(const CurveId& id) const { return coefficient(id).sign() > 0; }
  // True when every coefficient has an integer ramification index.
  bool is_strict_orbifold() const;
};

// Degrees of one curve against the pair (K + Delta), with the boundary split
// as Delta = Delta' + (1 - 1/e) E where Delta' omits the E component.
struct PairDegreeReport {
  Rational e_self;           // E^2
  Rational k_deg;            // K.E
  Rational pair_deg;         // (K + Delta).E
  Rational delta_deg;        // Delta.E
  Rational delta_prime_deg;  // Delta'.E
  Rational ceil_count;       // E.ceil(Delta')
};

void require_components_exist(const CurveConfig& config, const OrbifoldDivisor& delta);

// 0/1 indicator vector of positive-coefficient components.
QVector round_up(const CurveConfig& config, const OrbifoldDivisor& delta);

// Zero for every valid boundary (all coefficients < 1); provided so the klt
// check can be written in its explicit form.
QVector round_down(const CurveConfig& config, const OrbifoldDivisor& delta);

// Boundary as a class vector sum(d_i C_i).
QVector boundary_class(const CurveConfig& config, const OrbifoldDivisor& delta);

PairDegreeReport pair_degree(const CurveConfig& config, const OrbifoldDivisor& delta,
                             const CurveId& e);

}  // namespace orbsurf

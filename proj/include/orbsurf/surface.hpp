#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbsurf/lattice.hpp"

namespace orbsurf {

using CurveId = std::string;

// Combinatorial model of a projective surface: a finite list of tracked
// curve classes, their exact intersection matrix, and the canonical degrees
// K.C_i. Curves carry no equations; every statement we compute is numerical.
struct CurveConfig {
  std::string name;
  bool smooth_model = true;
  std::vector<CurveId> curves;
  QMatrix form;               // form(i, j) = C_i . C_j
  QVector kdeg;               // kdeg(i) = K . C_i
  std::optional<Rational> k_self;  // K^2 bookkeeping, when known

  Eigen::Index size() const { return static_cast<Eigen::Index>(curves.size()); }
  std::optional<Eigen::Index> find(const CurveId& id) const;
  Eigen::Index index_of(const CurveId& id) const;  // throws UnknownCurve

  QVector zero_class() const;
  QVector unit_class(const CurveId& id) const;
};

// Blowup center on a smooth model. SNC bookkeeping: at most two curves pass
// through the center, each with multiplicity one. When two curves are named,
// point_index selects among their C_i . C_j transversal intersection points.
struct BlowupCenter {
  std::vector<CurveId> through;
  long point_index = 0;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const CurveConfig& config);

Rational intersect(const CurveConfig& config, const QVector& d1, const QVector& d2);

// p_a(Z) = (Z.Z + K.Z)/2 + 1, exact for any class vector.
Rational arithmetic_genus(const CurveConfig& config, const QVector& z);

// Blow up the given center. The new exceptional curve E gets E^2 = K.E = -1;
// strict transforms follow C~.C~' = C.C' - m_C m_C', C~.E = m_C,
// K.C~ = K.C + m_C for center multiplicities m in {0,1}. Returns the new
// configuration together with the id of E.
std::pair<CurveConfig, CurveId> blow_up(const CurveConfig& config, const BlowupCenter& center);

// D + sum a_i E_i with the a_i solved so the result pairs to zero with every
// member of `exceptional`. Requires that block of the form to be negative
// definite.
QVector mumford_pullback(const CurveConfig& config, const std::vector<CurveId>& exceptional,
                         const QVector& d);

// Contract a negative definite bunch. Remaining curves keep their ids;
// intersections and canonical degrees are recomputed by pairing pullback
// representatives. smooth_model survives only the Castelnuovo case (single
// curve with E^2 = K.E = -1).
CurveConfig contract(const CurveConfig& config, const std::vector<CurveId>& bunch);

}  // namespace orbsurf

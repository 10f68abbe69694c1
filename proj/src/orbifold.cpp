#include "orbsurf/orbifold.hpp"

#include "orbsurf/errors.hpp"

namespace orbsurf {

BoundaryCoeff BoundaryCoeff::of_mult(long m) {
  if (m < 1) throw ValidationError("boundary multiplicity " + std::to_string(m) + " is below 1");
  BoundaryCoeff c;
  c.kind = Kind::kMult;
  c.mult = m;
  return c;
}

BoundaryCoeff BoundaryCoeff::of_frac(const Rational& d) {
  if (d.sign() < 0 || d >= Rational(1)) {
    throw ValidationError("fractional boundary coefficient " + d.str() + " is outside [0,1)");
  }
  BoundaryCoeff c;
  c.kind = Kind::kFrac;
  c.frac = d;
  return c;
}

Rational BoundaryCoeff::value() const {
  if (kind == Kind::kMult) return Rational(1) - Rational(1, mult);
  return frac;
}

std::optional<long> BoundaryCoeff::integer_ram() const {
  if (kind == Kind::kMult) return mult;
  const Rational r = Rational(1) / (Rational(1) - frac);
  if (!r.is_integer()) return std::nullopt;
  return r.to_long();
}

void OrbifoldDivisor::set_mult(const CurveId& id, long m) {
  BoundaryCoeff c = BoundaryCoeff::of_mult(m);
  if (m == 1) {
    components.erase(id);  // coefficient 0, normalized away
    return;
  }
  components[id] = c;
}

void OrbifoldDivisor::set_frac(const CurveId& id, const Rational& d) {
  components[id] = BoundaryCoeff::of_frac(d);
}

Rational OrbifoldDivisor::coefficient(const CurveId& id) const {
  auto it = components.find(id);
  return it == components.end() ? Rational(0) : it->second.value();
}

bool OrbifoldDivisor::is_strict_orbifold() const {
  for (const auto& [id, coeff] : components) {
    if (!coeff.integer_ram()) return false;
  }
  return true;
}

void require_components_exist(const CurveConfig& config, const OrbifoldDivisor& delta) {
  for (const auto& [id, coeff] : delta.components) config.index_of(id);
}

QVector round_up(const CurveConfig& config, const OrbifoldDivisor& delta) {
  require_components_exist(config, delta);
  QVector v = config.zero_class();
  for (const auto& [id, coeff] : delta.components) {
    if (coeff.value().sign() > 0) v(config.index_of(id)) = Rational(1);
  }
  return v;
}

QVector round_down(const CurveConfig& config, const OrbifoldDivisor& delta) {
  require_components_exist(config, delta);
  return config.zero_class();  // all coefficients lie in [0,1)
}

QVector boundary_class(const CurveConfig& config, const OrbifoldDivisor& delta) {
  require_components_exist(config, delta);
  QVector v = config.zero_class();
  for (const auto& [id, coeff] : delta.components) v(config.index_of(id)) = coeff.value();
  return v;
}

PairDegreeReport pair_degree(const CurveConfig& config, const OrbifoldDivisor& delta,
                             const CurveId& e) {
  const Eigen::Index ei = config.index_of(e);
  require_components_exist(config, delta);

  PairDegreeReport report;
  report.e_self = config.form(ei, ei);
  report.k_deg = config.kdeg(ei);

  Rational delta_deg;
  Rational prime_deg;
  Rational ceil_count;
  for (const auto& [id, coeff] : delta.components) {
    const Rational d = coeff.value();
    const Rational meet = config.form(config.index_of(id), ei);
    delta_deg += d * meet;
    if (id != e) {
      prime_deg += d * meet;
      if (d.sign() > 0) ceil_count += meet;
    }
  }
  report.delta_deg = delta_deg;
  report.delta_prime_deg = prime_deg;
  report.ceil_count = ceil_count;
  report.pair_deg = report.k_deg + delta_deg;
  return report;
}

}  // namespace orbsurf

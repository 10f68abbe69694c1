#include "orbsurf/surface.hpp"

#include <algorithm>
#include <set>

#include "orbsurf/errors.hpp"

namespace orbsurf {

namespace {

// Reserved by the tower address grammar and the CLI list syntax.
const char* kReservedIdChars = ";^#*@, \t\n";

bool id_is_clean(const CurveId& id) {
  return !id.empty() && id.find_first_of(kReservedIdChars) == std::string::npos;
}

std::vector<Eigen::Index> resolve_all(const CurveConfig& config, const std::vector<CurveId>& ids,
                                      const char* what) {
  std::vector<Eigen::Index> out;
  out.reserve(ids.size());
  std::set<Eigen::Index> seen;
  for (const CurveId& id : ids) {
    const Eigen::Index i = config.index_of(id);
    if (!seen.insert(i).second) throw ValidationError(std::string(what) + ": duplicate curve '" + id + "'");
    out.push_back(i);
  }
  if (out.empty()) throw ValidationError(std::string(what) + ": empty curve set");
  return out;
}

}  // namespace

std::optional<Eigen::Index> CurveConfig::find(const CurveId& id) const {
  for (size_t i = 0; i < curves.size(); ++i) {
    if (curves[i] == id) return static_cast<Eigen::Index>(i);
  }
  return std::nullopt;
}

Eigen::Index CurveConfig::index_of(const CurveId& id) const {
  if (auto i = find(id)) return *i;
  throw UnknownCurve("unknown curve '" + id + "' in configuration '" + name + "'");
}

QVector CurveConfig::zero_class() const {
  QVector v(size());
  v.setZero();
  return v;
}

QVector CurveConfig::unit_class(const CurveId& id) const {
  QVector v = zero_class();
  v(index_of(id)) = Rational(1);
  return v;
}

ValidationReport validate(const CurveConfig& config) {
  ValidationReport report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };

  const Eigen::Index n = config.size();
  std::set<CurveId> seen;
  for (const CurveId& id : config.curves) {
    if (!id_is_clean(id)) fail("curve id '" + id + "' is empty or uses a reserved character");
    if (!seen.insert(id).second) fail("duplicate curve id '" + id + "'");
  }
  if (config.form.rows() != n || config.form.cols() != n) {
    fail("intersection form is " + std::to_string(config.form.rows()) + "x" +
         std::to_string(config.form.cols()) + " but " + std::to_string(n) + " curves are declared");
    return report;  // shape is off; nothing below is meaningful
  }
  if (config.kdeg.size() != n) {
    fail("kdeg has length " + std::to_string(config.kdeg.size()) + " but " + std::to_string(n) +
         " curves are declared");
    return report;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (config.form(i, j) != config.form(j, i)) {
        fail("intersection form is not symmetric at (" + config.curves[i] + ", " +
             config.curves[j] + ")");
      }
    }
  }
  if (config.smooth_model) {
    // Cartier curve on a smooth model: p_a must be a nonnegative integer.
    for (Eigen::Index i = 0; i < n; ++i) {
      const Rational& self = config.form(i, i);
      const Rational& kd = config.kdeg(i);
      if (!self.is_integer() || !kd.is_integer()) continue;
      const Rational pa = (self + kd) / Rational(2) + Rational(1);
      if (!pa.is_integer()) {
        fail("curve '" + config.curves[i] + "' violates adjunction parity: C^2 + K.C = " +
             (self + kd).str() + " is odd");
      } else if (pa.sign() < 0) {
        fail("curve '" + config.curves[i] + "' has negative arithmetic genus " + pa.str());
      }
    }
  }
  return report;
}

Rational intersect(const CurveConfig& config, const QVector& d1, const QVector& d2) {
  if (d1.size() != config.size() || d2.size() != config.size()) {
    throw DimensionMismatch("intersect: class vectors do not match the configuration");
  }
  return eval_form(config.form, d1, d2);
}

Rational arithmetic_genus(const CurveConfig& config, const QVector& z) {
  if (z.size() != config.size()) {
    throw DimensionMismatch("arithmetic_genus: class vector does not match the configuration");
  }
  const Rational self = eval_form(config.form, z, z);
  Rational kz;
  for (Eigen::Index i = 0; i < config.size(); ++i) kz += config.kdeg(i) * z(i);
  return (self + kz) / Rational(2) + Rational(1);
}

std::pair<CurveConfig, CurveId> blow_up(const CurveConfig& config, const BlowupCenter& center) {
  if (!config.smooth_model) throw NotSmoothModel("blow_up: configuration is not a smooth model");
  if (center.through.size() > 2) throw BadCenter("blow_up: at most two curves may pass through a center");
  if (center.point_index < 0) throw BadCenter("blow_up: negative point index");
  if (center.through.size() < 2 && center.point_index != 0) {
    throw BadCenter("blow_up: point index applies only to two-curve centers");
  }

  const Eigen::Index n = config.size();
  std::vector<Eigen::Index> through;
  for (const CurveId& id : center.through) through.push_back(config.index_of(id));
  if (through.size() == 2) {
    if (through[0] == through[1]) throw BadCenter("blow_up: center names the same curve twice");
    const Rational& meet = config.form(through[0], through[1]);
    if (!meet.is_integer() || meet.sign() <= 0 || meet.to_long() < center.point_index + 1) {
      throw BadCenter("blow_up: curves '" + center.through[0] + "' and '" + center.through[1] +
                      "' have no intersection point #" + std::to_string(center.point_index));
    }
  }

  std::vector<long> mult(static_cast<size_t>(n), 0);
  for (Eigen::Index i : through) mult[static_cast<size_t>(i)] = 1;

  CurveConfig out;
  out.name = config.name;
  out.smooth_model = true;
  out.curves = config.curves;
  CurveId exceptional;
  for (int k = 1;; ++k) {
    exceptional = "E" + std::to_string(k);
    if (!config.find(exceptional)) break;
  }
  out.curves.push_back(exceptional);

  out.form = QMatrix(n + 1, n + 1);
  out.kdeg = QVector(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.form(i, j) = config.form(i, j) - Rational(mult[static_cast<size_t>(i)] *
                                                    mult[static_cast<size_t>(j)]);
    }
    out.form(i, n) = Rational(mult[static_cast<size_t>(i)]);
    out.form(n, i) = out.form(i, n);
    out.kdeg(i) = config.kdeg(i) + Rational(mult[static_cast<size_t>(i)]);
  }
  out.form(n, n) = Rational(-1);
  out.kdeg(n) = Rational(-1);
  if (config.k_self) out.k_self = *config.k_self - Rational(1);
  return {std::move(out), exceptional};
}

QVector mumford_pullback(const CurveConfig& config, const std::vector<CurveId>& exceptional,
                         const QVector& d) {
  if (d.size() != config.size()) {
    throw DimensionMismatch("mumford_pullback: class vector does not match the configuration");
  }
  const std::vector<Eigen::Index> exc = resolve_all(config, exceptional, "mumford_pullback");
  const Eigen::Index m = static_cast<Eigen::Index>(exc.size());

  QMatrix block(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) block(i, j) = config.form(exc[i], exc[j]);
  }
  if (!is_negative_definite(block)) {
    throw NotNegativeDefinite("mumford_pullback: exceptional bunch is not negative definite");
  }
  QVector rhs(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    Rational pairing;
    for (Eigen::Index c = 0; c < config.size(); ++c) {
      if (!d(c).is_zero()) pairing += config.form(exc[j], c) * d(c);
    }
    rhs(j) = -pairing;
  }
  const QVector a = solve_linear(block, rhs);
  QVector out = d;
  for (Eigen::Index i = 0; i < m; ++i) out(exc[i]) += a(i);
  return out;
}

CurveConfig contract(const CurveConfig& config, const std::vector<CurveId>& bunch) {
  const std::vector<Eigen::Index> exc = resolve_all(config, bunch, "contract");
  const Eigen::Index m = static_cast<Eigen::Index>(exc.size());

  QMatrix block(m, m);
  QVector kblock(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) block(i, j) = config.form(exc[i], exc[j]);
    kblock(i) = config.kdeg(exc[i]);
  }
  if (!is_negative_definite(block)) {
    throw NotNegativeDefinite("contract: bunch is not negative definite");
  }

  std::vector<Eigen::Index> rest;
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    if (std::find(exc.begin(), exc.end(), i) == exc.end()) rest.push_back(i);
  }
  const Eigen::Index r = static_cast<Eigen::Index>(rest.size());

  // Pullback representative of each surviving curve, orthogonal to the bunch.
  std::vector<QVector> rep;
  rep.reserve(static_cast<size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    rep.push_back(mumford_pullback(config, bunch, config.unit_class(config.curves[rest[i]])));
  }

  CurveConfig out;
  out.name = config.name;
  out.curves.reserve(static_cast<size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) out.curves.push_back(config.curves[rest[i]]);
  out.form = QMatrix(r, r);
  out.kdeg = QVector(r);
  for (Eigen::Index j = 0; j < r; ++j) {
    const QVector paired = config.form * rep[static_cast<size_t>(j)];
    for (Eigen::Index i = 0; i <= j; ++i) {
      // rep_i . form . rep_j collapses to e_i . form . rep_j by orthogonality.
      out.form(i, j) = paired(rest[i]);
      out.form(j, i) = out.form(i, j);
    }
    Rational kd;
    for (Eigen::Index c = 0; c < config.size(); ++c) {
      if (!rep[static_cast<size_t>(j)](c).is_zero()) kd += config.kdeg(c) * rep[static_cast<size_t>(j)](c);
    }
    out.kdeg(j) = kd;
  }

  const bool castelnuovo =
      m == 1 && block(0, 0) == Rational(-1) && kblock(0) == Rational(-1);
  out.smooth_model = config.smooth_model && castelnuovo;

  if (config.k_self) {
    // K'^2 = K^2 - a^T (K.E_j) with a the kdeg-orthogonalizing coefficients.
    const QVector ak = solve_linear(block, kblock);
    Rational corr;
    for (Eigen::Index i = 0; i < m; ++i) corr += ak(i) * kblock(i);
    out.k_self = *config.k_self - corr;
  }
  return out;
}

}  // namespace orbsurf

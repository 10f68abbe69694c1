#pragma once

#include <optional>
#include <random>
#include <vector>

#include "orbsurf/orbifold.hpp"

namespace testgen {

inline orbsurf::QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index m = n == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  orbsurf::QMatrix a(n, m);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) a(i, j++) = orbsurf::Rational(v);
    ++i;
  }
  return a;
}

inline orbsurf::QVector vec(std::initializer_list<long> entries) {
  orbsurf::QVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) v(i++) = orbsurf::Rational(e);
  return v;
}

inline orbsurf::CurveConfig make_config(std::string name, std::vector<orbsurf::CurveId> curves,
                                        orbsurf::QMatrix form, orbsurf::QVector kdeg,
                                        std::optional<long> k_self = std::nullopt,
                                        bool smooth = true) {
  orbsurf::CurveConfig config;
  config.name = std::move(name);
  config.smooth_model = smooth;
  config.curves = std::move(curves);
  config.form = std::move(form);
  config.kdeg = std::move(kdeg);
  if (k_self) config.k_self = orbsurf::Rational(*k_self);
  return config;
}

// Random smooth configuration with integer intersections and adjunction-
// consistent canonical degrees (genus 0 or 1 per curve).
inline orbsurf::CurveConfig random_smooth_config(std::mt19937_64& rng, int min_n = 1,
                                                 int max_n = 4) {
  std::uniform_int_distribution<int> nd(min_n, max_n);
  std::uniform_int_distribution<long> self(-4, 2);
  std::uniform_int_distribution<int> meet(0, 5);  // folded to {0,0,0,1,1,2}
  std::uniform_int_distribution<int> genus(0, 4); // mostly rational curves
  std::uniform_int_distribution<int> tracked(0, 2);
  std::uniform_int_distribution<long> ksq(-6, 9);

  const int n = nd(rng);
  orbsurf::CurveConfig config;
  config.name = "random";
  config.smooth_model = true;
  for (int i = 0; i < n; ++i) config.curves.push_back("c" + std::to_string(i));
  config.form = orbsurf::QMatrix(n, n);
  config.kdeg = orbsurf::QVector(n);
  for (int i = 0; i < n; ++i) {
    const long s = self(rng);
    const long g = genus(rng) == 0 ? 1 : 0;
    config.form(i, i) = orbsurf::Rational(s);
    config.kdeg(i) = orbsurf::Rational(-s - 2 + 2 * g);
    for (int j = i + 1; j < n; ++j) {
      const int m = meet(rng);
      const long v = m < 3 ? 0 : (m < 5 ? 1 : 2);
      config.form(i, j) = config.form(j, i) = orbsurf::Rational(v);
    }
  }
  if (tracked(rng) != 0) config.k_self = orbsurf::Rational(ksq(rng));
  return config;
}

inline orbsurf::BlowupCenter random_center(std::mt19937_64& rng,
                                           const orbsurf::CurveConfig& config) {
  std::uniform_int_distribution<int> kind(0, 2);
  orbsurf::BlowupCenter center;
  const int k = kind(rng);
  if (k == 0 || config.size() == 0) return center;
  std::uniform_int_distribution<Eigen::Index> pick(0, config.size() - 1);
  if (k == 1) {
    center.through = {config.curves[static_cast<size_t>(pick(rng))]};
    return center;
  }
  // Pairs meeting at least once; fall back to a one-curve center.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  for (Eigen::Index i = 0; i < config.size(); ++i) {
    for (Eigen::Index j = i + 1; j < config.size(); ++j) {
      if (config.form(i, j).sign() > 0) pairs.emplace_back(i, j);
    }
  }
  if (pairs.empty()) {
    center.through = {config.curves[static_cast<size_t>(pick(rng))]};
    return center;
  }
  std::uniform_int_distribution<size_t> pp(0, pairs.size() - 1);
  const auto [i, j] = pairs[pp(rng)];
  center.through = {config.curves[static_cast<size_t>(i)], config.curves[static_cast<size_t>(j)]};
  std::uniform_int_distribution<long> pt(0, config.form(i, j).to_long() - 1);
  center.point_index = pt(rng);
  return center;
}

inline bool config_equal(const orbsurf::CurveConfig& x, const orbsurf::CurveConfig& y) {
  if (x.name != y.name || x.smooth_model != y.smooth_model || x.curves != y.curves) return false;
  if (x.form.rows() != y.form.rows() || x.form.cols() != y.form.cols()) return false;
  for (Eigen::Index i = 0; i < x.form.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.form.cols(); ++j) {
      if (x.form(i, j) != y.form(i, j)) return false;
    }
  }
  if (x.kdeg.size() != y.kdeg.size()) return false;
  for (Eigen::Index i = 0; i < x.kdeg.size(); ++i) {
    if (x.kdeg(i) != y.kdeg(i)) return false;
  }
  if (x.k_self.has_value() != y.k_self.has_value()) return false;
  if (x.k_self && *x.k_self != *y.k_self) return false;
  return true;
}

}  // namespace testgen

#include <doctest.h>

#include "helpers.hpp"
#include "orbsurf/errors.hpp"
#include "orbsurf/io.hpp"
#include "orbsurf/mmp.hpp"

using namespace orbsurf;
using testgen::config_equal;
using testgen::make_config;
using testgen::mat;
using testgen::vec;

namespace {

// The plane blown up at k general points: H, E1..Ek pairwise disjoint.
CurveConfig blown_plane(int k) {
  const Eigen::Index n = k + 1;
  CurveConfig config;
  config.name = "p2-blown-" + std::to_string(k);
  config.smooth_model = true;
  config.curves.push_back("H");
  for (int i = 1; i <= k; ++i) config.curves.push_back("E" + std::to_string(i));
  config.form = QMatrix(n, n);
  config.kdeg = QVector(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) config.form(i, j) = Rational(0);
  }
  config.form(0, 0) = Rational(1);
  config.kdeg(0) = Rational(-3);
  for (Eigen::Index i = 1; i < n; ++i) {
    config.form(i, i) = Rational(-1);
    config.kdeg(i) = Rational(-1);
  }
  config.k_self = Rational(9 - k);
  return config;
}

}  // namespace

TEST_CASE("negative extremal candidates are found and ordered") {
  const CurveConfig p2 = fixture_bundle("p2").config;
  const auto plane = find_negative_extremal(p2, OrbifoldDivisor::empty());
  REQUIRE(plane.size() == 1);
  CHECK(plane[0].first == "H");
  CHECK(plane[0].second.pair_deg == Rational(-3));
  CHECK(plane[0].second.e_self == Rational(1));

  const CurveConfig quadric = fixture_bundle("quadric").config;
  const auto fibers = find_negative_extremal(quadric, OrbifoldDivisor::empty());
  REQUIRE(fibers.size() == 2);
  CHECK(fibers[0].first == "F1");
  CHECK(fibers[0].second.pair_deg == Rational(-2));
  CHECK(fibers[0].second.e_self == Rational(0));

  // Negative self-intersections come first, then declared order.
  const auto mixed = find_negative_extremal(blown_plane(2), OrbifoldDivisor::empty());
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[0].first == "E1");
  CHECK(mixed[1].first == "E2");
  CHECK(mixed[2].first == "H");

  // A curve with nonnegative pair degree is not listed.
  const CurveConfig nef = make_config("nef", {"C"}, mat({{-2}}), vec({0}));
  CHECK(find_negative_extremal(nef, OrbifoldDivisor::empty()).empty());
}

TEST_CASE("single step on the worked fixtures") {
  const StepOutcome down = mmp_step(blown_plane(1), OrbifoldDivisor::empty());
  CHECK(down.kind == StepOutcome::Kind::kContractedDivisorial);
  CHECK(*down.curve == "E1");
  REQUIRE(down.classification.has_value());
  CHECK(down.classification->case_tag == CurveClassification::CaseTag::kCase1MinusOne);
  REQUIRE(down.next_config.has_value());
  CurveConfig expected = fixture_bundle("p2").config;
  expected.name = "p2-blown-1";
  CHECK(config_equal(*down.next_config, expected));
  CHECK(down.next_delta->components.empty());

  const StepOutcome plane = mmp_step(fixture_bundle("p2").config, OrbifoldDivisor::empty());
  CHECK(plane.kind == StepOutcome::Kind::kPlaneCase);
  CHECK(*plane.curve == "H");

  const StepOutcome fiber = mmp_step(fixture_bundle("quadric").config, OrbifoldDivisor::empty());
  CHECK(fiber.kind == StepOutcome::Kind::kFiberCase);
  CHECK(*fiber.curve == "F1");

  const CurveConfig nef = make_config("nef", {"C"}, mat({{-2}}), vec({0}));
  CHECK(mmp_step(nef, OrbifoldDivisor::empty()).kind == StepOutcome::Kind::kNoListedViolation);
}

TEST_CASE("boundary components push forward by dropping the contracted curve") {
  CurveConfig config = blown_plane(1);
  config.form(0, 1) = config.form(1, 0) = Rational(1);  // E1 meets H once
  config.form(0, 0) = Rational(0);
  config.kdeg(0) = Rational(-2);
  OrbifoldDivisor delta;
  delta.set_mult("H", 2);

  const StepOutcome step = mmp_step(config, delta);
  CHECK(step.kind == StepOutcome::Kind::kContractedDivisorial);
  CHECK(*step.curve == "E1");
  CHECK(step.next_delta->coefficient("H") == Rational(1, 2));
  CHECK(step.next_delta->components.size() == 1);
}

TEST_CASE("runs terminate with the expected trichotomy") {
  for (int k = 0; k <= 3; ++k) {
    const auto trace = mmp_run(blown_plane(k), OrbifoldDivisor::empty(), 100);
    REQUIRE(trace.size() == static_cast<size_t>(k) + 1);
    for (int i = 0; i < k; ++i) {
      CHECK(trace[static_cast<size_t>(i)].kind == StepOutcome::Kind::kContractedDivisorial);
    }
    CHECK(trace.back().kind == StepOutcome::Kind::kPlaneCase);
  }

  const auto quadric_trace =
      mmp_run(fixture_bundle("quadric").config, OrbifoldDivisor::empty(), 100);
  REQUIRE(quadric_trace.size() == 1);
  CHECK(quadric_trace[0].kind == StepOutcome::Kind::kFiberCase);

  const CurveConfig nef = make_config("nef", {"C"}, mat({{-2}}), vec({0}));
  const auto idle = mmp_run(nef, OrbifoldDivisor::empty(), 100);
  REQUIRE(idle.size() == 1);
  CHECK(idle[0].kind == StepOutcome::Kind::kNoListedViolation);

  CHECK(mmp_run(blown_plane(2), OrbifoldDivisor::empty(), 0).empty());
  CHECK_THROWS_AS(mmp_run(nef, OrbifoldDivisor::empty(), -1), ValidationError);
}

TEST_CASE("divisorial steps preserve the corrected pairing") {
  // Contract a (-1)-curve meeting H: pushed-forward intersections must match
  // the pullback-representative computation done independently.
  CurveConfig config = make_config("touch", {"H", "E1"}, mat({{0, 1}, {1, -1}}), vec({-2, -1}), 8);
  const StepOutcome step = mmp_step(config, OrbifoldDivisor::empty());
  REQUIRE(step.kind == StepOutcome::Kind::kContractedDivisorial);
  const QVector rep = mumford_pullback(config, {"E1"}, config.unit_class("H"));
  CHECK(step.next_config->form(0, 0) == intersect(config, rep, rep));
  CHECK(step.next_config->form(0, 0) == Rational(1));  // blowdown of a line through a point
}

TEST_CASE("each divisorial step drops exactly one curve") {
  CurveConfig config = blown_plane(4);
  OrbifoldDivisor delta;
  for (const auto& step : mmp_run(config, delta, 100)) {
    if (step.kind != StepOutcome::Kind::kContractedDivisorial) break;
    CHECK(step.next_config->size() == config.size() - 1);
    config = *step.next_config;
    delta = *step.next_delta;
  }
}

TEST_CASE("on b-terminal input the whole pipeline composes") {
  const CurveConfig config = blown_plane(2);
  BDivisorSpec spec;
  spec.base_ram["H"] = 2;
  REQUIRE(classify_b_pair(config, spec, 2).terminal);

  const OrbifoldDivisor trace = boundary_from_bspec(config, spec);
  const auto run = mmp_run(config, trace, 100);
  REQUIRE(run.size() == 3);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(run[i].kind == StepOutcome::Kind::kContractedDivisorial);
    REQUIRE(run[i].classification.has_value());  // classifier raised nothing
    CHECK(run[i].classification->genus == Rational(0));
  }
  CHECK(run.back().kind == StepOutcome::Kind::kPlaneCase);
}

TEST_CASE("divisorial contraction needs a smooth model") {
  CurveConfig sing = blown_plane(1);
  sing.smooth_model = false;
  CHECK_THROWS_AS(mmp_step(sing, OrbifoldDivisor::empty()), NotSmoothModel);
}

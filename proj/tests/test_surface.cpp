#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "orbsurf/errors.hpp"
#include "orbsurf/io.hpp"
#include "orbsurf/surface.hpp"

using namespace orbsurf;
using testgen::config_equal;
using testgen::make_config;
using testgen::mat;
using testgen::vec;

namespace {

CurveConfig p2() { return fixture_bundle("p2").config; }

QVector extend_by_zero(const QVector& v) {
  QVector out(v.size() + 1);
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i);
  out(v.size()) = Rational(0);
  return out;
}

}  // namespace

TEST_CASE("validate accepts the plane fixture and rejects broken shapes") {
  CHECK(validate(p2()).valid);

  CurveConfig assym = make_config("x", {"A", "B"}, mat({{0, 1}, {2, 0}}), vec({-2, -2}));
  CHECK_FALSE(validate(assym).valid);

  CurveConfig short_kdeg = make_config("x", {"A", "B"}, mat({{0, 1}, {1, 0}}), vec({-2}));
  CHECK_FALSE(validate(short_kdeg).valid);

  CurveConfig dup = make_config("x", {"A", "A"}, mat({{0, 1}, {1, 0}}), vec({-2, -2}));
  CHECK_FALSE(validate(dup).valid);

  CurveConfig reserved = make_config("x", {"A;B"}, mat({{1}}), vec({-3}));
  CHECK_FALSE(validate(reserved).valid);

  // p_a(H) would be -1: adjunction forbids it on a smooth model.
  CurveConfig bad_parity = make_config("x", {"H"}, mat({{1}}), vec({-2}));
  CHECK_FALSE(validate(bad_parity).valid);
  CurveConfig bad_genus = make_config("x", {"H"}, mat({{-3}}), vec({-1}));
  CHECK_FALSE(validate(bad_genus).valid);
  bad_genus.smooth_model = false;  // no Cartier certificate away from smooth models
  CHECK(validate(bad_genus).valid);
}

TEST_CASE("intersect reads the form") {
  const CurveConfig plane = p2();
  CHECK(intersect(plane, plane.unit_class("H"), plane.unit_class("H")) == Rational(1));

  const CurveConfig blown = fixture_bundle("p2-blowup").config;
  CHECK(intersect(blown, blown.unit_class("E1"), blown.unit_class("E1")) == Rational(-1));
  CHECK(intersect(blown, blown.zero_class(), blown.unit_class("H")) == Rational(0));
  CHECK_THROWS_AS(intersect(plane, blown.unit_class("E1"), plane.unit_class("H")),
                  DimensionMismatch);
}

TEST_CASE("arithmetic genus on worked cycles") {
  // (-1)-curve, (-2)-curve, and the A2 cycle C1 + C2.
  const CurveConfig blown = fixture_bundle("p2-blowup").config;
  CHECK(arithmetic_genus(blown, blown.unit_class("E1")) == Rational(0));

  const CurveConfig a2 = fixture_bundle("a2").config;
  CHECK(arithmetic_genus(a2, a2.unit_class("C1")) == Rational(0));
  CHECK(arithmetic_genus(a2, vec({1, 1})) == Rational(0));
}

TEST_CASE("arithmetic genus is affine-quadratic") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coeff(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const CurveConfig config = testgen::random_smooth_config(rng);
    QVector z1(config.size()), z2(config.size());
    for (Eigen::Index i = 0; i < config.size(); ++i) {
      z1(i) = Rational(coeff(rng));
      z2(i) = Rational(coeff(rng));
    }
    const Rational lhs = arithmetic_genus(config, QVector(z1 + z2));
    const Rational rhs = arithmetic_genus(config, z1) + arithmetic_genus(config, z2) +
                         intersect(config, z1, z2) - Rational(1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("blow_up at a general point") {
  const auto [blown, e] = blow_up(p2(), BlowupCenter{});
  CHECK(e == "E1");
  CHECK(config_equal(blown, testgen::make_config("p2", {"H", "E1"}, mat({{1, 0}, {0, -1}}),
                                                 vec({-3, -1}), 8)));
}

TEST_CASE("blow_up at a point of one curve") {
  const auto [blown, e] = blow_up(p2(), BlowupCenter{{"H"}, 0});
  CHECK(blown.form(0, 0) == Rational(0));   // H~^2
  CHECK(blown.form(0, 1) == Rational(1));   // H~.E
  CHECK(blown.kdeg(0) == Rational(-2));     // K.H~
  CHECK(arithmetic_genus(blown, blown.unit_class("H")) == Rational(0));
  CHECK(arithmetic_genus(blown, blown.unit_class(e)) == Rational(0));
}

TEST_CASE("blow_up at an intersection point") {
  const auto [once, e1] = blow_up(p2(), BlowupCenter{{"H"}, 0});
  REQUIRE(once.form(0, 1) == Rational(1));
  const auto [twice, e2] = blow_up(once, BlowupCenter{{"H", e1}, 0});
  CHECK(e2 == "E2");
  const Eigen::Index h = twice.index_of("H");
  const Eigen::Index a = twice.index_of(e1);
  const Eigen::Index b = twice.index_of(e2);
  CHECK(twice.form(h, a) == Rational(0));
  CHECK(twice.form(h, b) == Rational(1));
  CHECK(twice.form(a, b) == Rational(1));
  CHECK(twice.form(a, a) == Rational(-2));
  CHECK(twice.form(b, b) == Rational(-1));
  CHECK(twice.kdeg(a) == Rational(0));
}

TEST_CASE("blow_up rejects bad centers") {
  CurveConfig sing = p2();
  sing.smooth_model = false;
  CHECK_THROWS_AS(blow_up(sing, BlowupCenter{}), NotSmoothModel);
  CHECK_THROWS_AS(blow_up(p2(), BlowupCenter{{"X"}, 0}), UnknownCurve);
  CHECK_THROWS_AS(blow_up(p2(), BlowupCenter{{"H"}, 1}), BadCenter);
  CHECK_THROWS_AS(blow_up(p2(), BlowupCenter{{"H", "H"}, 0}), BadCenter);

  const CurveConfig blown = fixture_bundle("p2-blowup").config;
  // H and E1 are disjoint there.
  CHECK_THROWS_AS(blow_up(blown, BlowupCenter{{"H", "E1"}, 0}), BadCenter);
  const CurveConfig quadric = fixture_bundle("quadric").config;
  CHECK_THROWS_AS(blow_up(quadric, BlowupCenter{{"F1", "F2"}, 1}), BadCenter);
  CHECK_NOTHROW(blow_up(quadric, BlowupCenter{{"F1", "F2"}, 0}));
}

TEST_CASE("mumford pullback worked cases") {
  const CurveConfig blown = fixture_bundle("p2-blowup").config;
  CurveConfig touching = blown;
  touching.form(0, 1) = touching.form(1, 0) = Rational(1);  // H.E1 = 1 variant
  touching.kdeg(0) = Rational(-3);

  const QVector lifted = mumford_pullback(touching, {"E1"}, touching.unit_class("H"));
  CHECK(lifted(0) == Rational(1));
  CHECK(lifted(1) == Rational(1));  // D + 1.E

  // Already orthogonal: unchanged.
  const QVector flat = mumford_pullback(blown, {"E1"}, blown.unit_class("H"));
  CHECK(flat == blown.unit_class("H"));

  // A2 bunch under a transverse curve: a = (2/3, 1/3).
  CurveConfig a2c = make_config("a2c", {"D", "C1", "C2"},
                                mat({{-1, 1, 0}, {1, -2, 1}, {0, 1, -2}}), vec({-1, 0, 0}));
  const QVector lift = mumford_pullback(a2c, {"C1", "C2"}, a2c.unit_class("D"));
  CHECK(lift(1) == Rational(2, 3));
  CHECK(lift(2) == Rational(1, 3));

  const CurveConfig quadric = fixture_bundle("quadric").config;
  CHECK_THROWS_AS(mumford_pullback(quadric, {"F1"}, quadric.unit_class("F2")),
                  NotNegativeDefinite);
}

TEST_CASE("contract inverts a blowup") {
  const auto [blown, e] = blow_up(p2(), BlowupCenter{{"H"}, 0});
  CHECK(config_equal(contract(blown, {e}), p2()));
}

TEST_CASE("contract applies the Mumford correction") {
  CurveConfig a2c = make_config("a2c", {"D", "C1", "C2"},
                                mat({{-1, 1, 0}, {1, -2, 1}, {0, 1, -2}}), vec({-1, 0, 0}), 5);
  const CurveConfig contracted = contract(a2c, {"C1", "C2"});
  CHECK(contracted.curves == std::vector<CurveId>{"D"});
  CHECK(contracted.form(0, 0) == Rational(-1) + Rational(2, 3));
  CHECK(contracted.kdeg(0) == Rational(-1));  // crepant bunch: K.E_i = 0
  CHECK_FALSE(contracted.smooth_model);
  REQUIRE(contracted.k_self.has_value());
  CHECK(*contracted.k_self == Rational(5));

  CHECK_THROWS_AS(contract(fixture_bundle("quadric").config, {"F1"}), NotNegativeDefinite);
}

TEST_CASE("pullback invariance and blowdown round trip on random configurations") {
  std::mt19937_64 rng(90210);
  std::uniform_int_distribution<long> coeff(-3, 3);
  int round_trips = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const CurveConfig config = testgen::random_smooth_config(rng);
    const BlowupCenter center = testgen::random_center(rng, config);
    const auto [blown, e] = blow_up(config, center);

    // The new exceptional is a (-1)-curve of genus zero.
    const Eigen::Index ei = blown.index_of(e);
    CHECK(blown.form(ei, ei) == Rational(-1));
    CHECK(blown.kdeg(ei) == Rational(-1));
    CHECK(arithmetic_genus(blown, blown.unit_class(e)) == Rational(0));

    QVector d1(config.size()), d2(config.size());
    for (Eigen::Index i = 0; i < config.size(); ++i) {
      d1(i) = Rational(coeff(rng));
      d2(i) = Rational(coeff(rng));
    }
    const QVector p1 = mumford_pullback(blown, {e}, extend_by_zero(d1));
    const QVector p2v = mumford_pullback(blown, {e}, extend_by_zero(d2));
    CHECK(intersect(blown, p1, p2v) == intersect(config, d1, d2));
    CHECK(intersect(blown, p1, blown.unit_class(e)).is_zero());

    if (config_equal(contract(blown, {e}), config)) ++round_trips;
  }
  CHECK(round_trips == 300);
}

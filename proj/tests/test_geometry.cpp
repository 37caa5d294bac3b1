#include "oblique/errors.hpp"
#include "oblique/geometry.hpp"
#include "oblique/region.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace oblique;

namespace {
constexpr double pi = std::numbers::pi;

// Fourth-order central difference of z^(order) in t.
Vec2 fd(const TrigCurve& c, double t, int order) {
  const double h = 1e-3;
  return (c.derivative(t - 2 * h, order) - 8.0 * c.derivative(t - h, order) +
          8.0 * c.derivative(t + h, order) - c.derivative(t + 2 * h, order)) /
         (12.0 * h);
}
}  // namespace

TEST_CASE("kite derivatives agree with finite differences") {
  const TrigCurve kite = kite_curve();
  for (double t : {0.0, 0.4, 1.3, 2.9, 4.4, 6.0}) {
    for (int order = 0; order < 3; ++order) {
      const Vec2 diff = fd(kite, t, order) - kite.derivative(t, order + 1);
      CHECK(diff.norm() < 1e-9);
    }
  }
}

TEST_CASE("kite closed form at t = 0") {
  const FrameSample f = curve_eval(kite_curve(), 0.0);
  CHECK(f.z.x() == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(f.z.y() == doctest::Approx(0.0));
  CHECK(f.d1.x() == doctest::Approx(0.0));
  CHECK(f.d1.y() == doctest::Approx(2.5));
  CHECK(f.speed == doctest::Approx(2.5));
  // z'(0) = (0, 2.5) so J z' points along +x.
  CHECK(f.normal.x() == doctest::Approx(1.0));
  CHECK(f.tangent.y() == doctest::Approx(1.0));
}

TEST_CASE("frame is orthonormal with outward normal on the circle") {
  const TrigCurve c = circle_curve(2.0, Vec2(0.5, -0.25));
  for (int i = 0; i < 16; ++i) {
    const double t = 2 * pi * i / 16;
    const FrameSample f = curve_eval(c, t);
    CHECK(f.normal.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(f.normal.dot(f.tangent)) < 1e-15);
    CHECK(std::abs(f.normal.dot(f.d1)) < 1e-14);
    const Vec2 radial = (f.z - Vec2(0.5, -0.25)) / 2.0;
    CHECK((f.normal - radial).norm() < 1e-14);
    CHECK(f.tangent.dot(f.d1) > 0.0);
  }
}

TEST_CASE("signed area") {
  CHECK(signed_area(kite_curve()) == doctest::Approx(5.0 * pi).epsilon(1e-13));
  CHECK(signed_area(circle_curve(1.5)) == doctest::Approx(pi * 2.25).epsilon(1e-13));
  CHECK(signed_area(ellipse_curve(2.0, 0.5)) == doctest::Approx(pi).epsilon(1e-13));
  CHECK(orientation_check(kite_curve()) > 0.0);
}

TEST_CASE("clockwise curve is rejected by the orientation check") {
  const TrigCurve cw("cw", TrigSeries{0.0, {{1, 1.0, 0.0}}}, TrigSeries{0.0, {{1, 0.0, -1.0}}});
  CHECK(signed_area(cw) < 0.0);
  CHECK_THROWS_AS(orientation_check(cw), GeometryError);
}

TEST_CASE("degenerate and malformed curves") {
  // x = y = cos t has zero speed at t = 0.
  CHECK_THROWS_AS(TrigCurve("flat", TrigSeries{0.0, {{1, 1.0, 0.0}}},
                            TrigSeries{0.0, {{1, 1.0, 0.0}}}),
                  GeometryError);
  CHECK_THROWS_AS(TrigCurve("bad", TrigSeries{0.0, {{0, 1.0, 0.0}}},
                            TrigSeries{0.0, {{1, 0.0, 1.0}}}),
                  GeometryError);
  CHECK_THROWS_AS(curve_eval(kite_curve(), 0.0, 4), ContractError);
  CHECK_THROWS_AS(kite_curve().derivative(0.0, 5), ContractError);
}

TEST_CASE("curve is 2 pi periodic in every derivative") {
  const TrigCurve kite = kite_curve();
  for (int order = 0; order <= 3; ++order)
    CHECK((kite.derivative(0.7, order) - kite.derivative(0.7 + 2 * pi, order)).norm() < 1e-13);
  CHECK(kite.max_mode() == 2);
}

TEST_CASE("winding number classification") {
  const TrigCurve kite = kite_curve();
  const BoundaryPolygon poly(kite, 512);
  CHECK(poly.inside(Vec2(0.0, 0.0)));
  CHECK(poly.inside(Vec2(0.5, 1.0)));
  CHECK(poly.inside(Vec2(0.0, -0.5)));
  CHECK_FALSE(poly.inside(Vec2(1.0, 2.0)));
  CHECK_FALSE(poly.inside(Vec2(0.0, -2.5 - 1e-3)));
  // The kite is indented on the left: (-1.7, 0) lies in the notch.
  CHECK_FALSE(poly.inside(Vec2(-1.7, 0.0)));
  CHECK(poly.winding_number(Vec2(10.0, 10.0)) == 0);

  const auto near = poly.nearest(Vec2(3.0, 0.0));
  CHECK(near.distance == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(std::remainder(near.t, 2 * pi)) < 0.02);
}

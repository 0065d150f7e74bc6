#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cwidth/body.hpp"

using namespace cwidth;
using std::numbers::pi;

namespace {

const Geometry kAll[] = {Geometry::euclidean, Geometry::spherical, Geometry::hyperbolic};

// Dense-sampling oracle: max minus min of log B(x, w) over boundary samples.
double dense_horo_width(const DiskPolygon& K, const Vec3& w, int n) {
  double lo = INFINITY, hi = -INFINITY;
  for (const Point& x : K.sample_boundary(n)) {
    double v = std::log(bilinear_form(x.ambient(), w));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

}  // namespace

TEST_CASE("circle intersection points lie on both circles") {
  for (Geometry g : kAll) {
    PolarFrame f(Point::reference(g));
    Circle a(f.center(), 0.6), b(f.at(0.5, 0.3), 0.45);
    std::vector<Point> xs = circle_intersect(a, b);
    REQUIRE(xs.size() == 2);
    for (const Point& x : xs) {
      CHECK(distance(x, a.center()) == doctest::Approx(0.6).epsilon(1e-12));
      CHECK(distance(x, b.center()) == doctest::Approx(0.45).epsilon(1e-12));
    }
    // Left of the directed center line first.
    CHECK(orientation(a.center(), b.center(), xs[0]) > 0);
    CHECK(orientation(a.center(), b.center(), xs[1]) < 0);
  }
}

TEST_CASE("circle intersection edge cases") {
  for (Geometry g : kAll) {
    PolarFrame f(Point::reference(g));
    CHECK(circle_intersect(Circle(f.center(), 0.2), Circle(f.at(1.0, 0), 0.3)).empty());
    std::vector<Point> t = circle_intersect(Circle(f.center(), 0.4), Circle(f.at(0.7, 0), 0.3));
    REQUIRE(t.size() == 1);
    CHECK(distance(t[0], f.at(0.4, 0)) < 1e-7);
    try {
      circle_intersect(Circle(f.center(), 0.2), Circle(f.center(), 0.3));
      FAIL("expected ConcentricCircles");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConcentricCircles);
    }
  }
}

TEST_CASE("tangent disks touch internally") {
  for (Geometry g : kAll) {
    PolarFrame f(Point::reference(g));
    const double D = 1.0, rho = 0.45;
    Point q = f.at(D - rho, 0.0);
    std::vector<Circle> cs = tangent_disks(f.center(), rho, q, D);
    REQUIRE(cs.size() == 2);
    for (const Circle& c : cs) {
      CHECK(c.radius() == D);
      CHECK(distance(c.center(), q) == doctest::Approx(D).epsilon(1e-12));
      CHECK(distance(c.center(), f.center()) == doctest::Approx(D - rho).epsilon(1e-12));
    }
    CHECK_THROWS_AS(tangent_disks(f.center(), rho, f.at(0.3, 0.0), D), Error);
  }
}

TEST_CASE("arc length and endpoints") {
  for (Geometry g : kAll) {
    Circle c(Point::reference(g), 0.7);
    Arc a(c, 0.2, 1.3);
    CHECK(arc_length(a) == doctest::Approx(c.length() * 1.3 / (2 * pi)));
    Arc b = Arc::from_endpoints(c, c.at(0.2), c.at(1.5), true);
    CHECK(b.arc_angle() == doctest::Approx(1.3));
    Arc r = Arc::from_endpoints(c, c.at(0.2), c.at(1.5), false);
    CHECK(r.arc_angle() == doctest::Approx(2 * pi - 1.3));
    CHECK_THROWS_AS(Arc::from_endpoints(c, Point::reference(g), c.at(1.0), true), Error);
  }
  CHECK(arc_length(Arc(Circle(Point::reference(Geometry::euclidean), 1.0), 0.0, 2 * pi)) ==
        doctest::Approx(2 * pi));
}

TEST_CASE("horoball width between nested horoballs") {
  // B(z, w) = exp(-t) at distance t from the reference point towards w.
  const Vec3 w = ideal_point(0.4);
  PolarFrame f(Point::reference(Geometry::hyperbolic));
  Point z = f.at(0.8, 0.4);
  CHECK(bilinear_form(z.ambient(), w) == doctest::Approx(std::exp(-0.8)));
  Horoball outer(w, std::exp(-0.8)), inner(w, 1.0);
  CHECK(horoball_width(outer, inner) == doctest::Approx(0.8));
  CHECK(outer.contains(Point::reference(Geometry::hyperbolic)));
  try {
    horoball_width(inner, outer);
    FAIL("expected NestedViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NestedViolation);
  }
  try {
    horoball_width(outer, Horoball(ideal_point(1.0), 1.0));
    FAIL("expected DifferentIdealPoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DifferentIdealPoints);
  }
}

TEST_CASE("horospherical width against dense sampling") {
  const Geometry g = Geometry::hyperbolic;
  PolarFrame f(Point::reference(g));
  DiskPolygon ball = DiskPolygon::ball(f.at(0.3, 1.0), 0.5);
  DiskPolygon lens = DiskPolygon::build({f.center(), f.at(1.0, 0.0)}, 1.0);
  for (double phi : {0.0, 0.7, 2.0, 4.5}) {
    Vec3 w = ideal_point(phi);
    CHECK(horospherical_width(ball, w) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(horospherical_width(lens, w) == doctest::Approx(dense_horo_width(lens, w, 200000)).epsilon(1e-7));
  }
  CHECK(horospherical_width_segment(f.center(), f.at(0.6, 0.0), ideal_point(0.0)) == doctest::Approx(0.6));
}

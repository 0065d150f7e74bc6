#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cwidth/surface.hpp"

using namespace cwidth;
using std::numbers::pi;

namespace {

const Geometry kAll[] = {Geometry::euclidean, Geometry::spherical, Geometry::hyperbolic};

// Independent distance formulas: Euclidean norm, arccos of the dot product, arccosh of B.
double oracle_distance(const Point& a, const Point& b) {
  const Vec3 &x = a.ambient(), &y = b.ambient();
  switch (a.geometry()) {
    case Geometry::euclidean: return std::hypot(x[0] - y[0], x[1] - y[1]);
    case Geometry::spherical: return std::acos(std::clamp(x.dot(y), -1.0, 1.0));
    case Geometry::hyperbolic: return std::acosh(std::max(1.0, bilinear_form(x, y)));
  }
  return 0.0;
}

// Circumradius of the regular triangle of side D by bisection on the law of cosines
// with apex angle 2pi/3 at the center.
double oracle_circumradius(double D, Geometry g) {
  auto side = [&](double R) {
    switch (g) {
      case Geometry::euclidean: return std::sqrt(3.0) * R;
      case Geometry::spherical:
        return std::acos(std::cos(R) * std::cos(R) - 0.5 * std::sin(R) * std::sin(R));
      case Geometry::hyperbolic:
        return std::acosh(std::cosh(R) * std::cosh(R) + 0.5 * std::sinh(R) * std::sinh(R));
    }
    return 0.0;
  };
  double lo = 0.0, hi = D;
  for (int k = 0; k < 200; ++k) {
    double mid = 0.5 * (lo + hi);
    (side(mid) < D ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Point random_point(Geometry g, std::mt19937_64& rng, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  double x = u(rng), y = u(rng);
  switch (g) {
    case Geometry::euclidean: return Point::euclidean(x, y);
    case Geometry::spherical: {
      Vec3 v(x, y, 1.0);
      return Point::from_ambient(g, v.normalized());
    }
    case Geometry::hyperbolic: return Point::hyperbolic(x, y, std::sqrt(1.0 + x * x + y * y));
  }
  return Point::reference(g);
}

}  // namespace

TEST_CASE("bilinear form signature") {
  CHECK(bilinear_form(Vec3(0, 0, 1), Vec3(0, 0, 1)) == 1.0);
  CHECK(bilinear_form(Vec3(1, 0, 0), Vec3(1, 0, 0)) == -1.0);
  CHECK(bilinear_form(Vec3(1, 2, 3), Vec3(4, 5, 6)) == doctest::Approx(18 - 4 - 10));
}

TEST_CASE("distance matches independent formulas") {
  std::mt19937_64 rng(11);
  for (Geometry g : kAll) {
    for (int k = 0; k < 200; ++k) {
      Point a = random_point(g, rng), b = random_point(g, rng);
      CHECK(distance(a, b) == doctest::Approx(oracle_distance(a, b)).epsilon(1e-9));
      CHECK(distance(a, b) == doctest::Approx(distance(b, a)).epsilon(1e-15));
    }
    CHECK(distance(Point::reference(g), Point::reference(g)) == 0.0);
  }
  CHECK(distance(Point::spherical(1, 0, 0), Point::spherical(0, 1, 0)) == doctest::Approx(pi / 2));
}

TEST_CASE("distance near coincidence keeps full relative precision") {
  const double eps = 1e-9;
  Point a = Point::hyperbolic(0, 0, 1);
  Point b = Point::hyperbolic(eps, 0, std::sqrt(1 + eps * eps));
  CHECK(distance(a, b) == doctest::Approx(eps).epsilon(1e-6));
  Point c = Point::spherical(std::sin(eps), 0, std::cos(eps));
  CHECK(distance(Point::spherical(0, 0, 1), c) == doctest::Approx(eps).epsilon(1e-6));
}

TEST_CASE("exp and log are inverse") {
  std::mt19937_64 rng(3);
  for (Geometry g : kAll) {
    for (int k = 0; k < 100; ++k) {
      Point a = random_point(g, rng), b = random_point(g, rng);
      LogResult l = log_map(a, b);
      CHECK(tangent_norm(g, l.dir.dir) == doctest::Approx(1.0));
      CHECK(l.length == doctest::Approx(distance(a, b)));
      Point back = exp_map(l.dir, l.length);
      CHECK(distance(back, b) < 1e-10);
    }
  }
}

TEST_CASE("exp and log reject bad input") {
  Point z = Point::reference(Geometry::hyperbolic);
  CHECK_THROWS_AS(exp_map(z, Vec3(2, 0, 0), 1.0), Error);
  CHECK_THROWS_AS(log_map(z, z), Error);
  Point n = Point::spherical(0, 0, 1), s = Point::spherical(0, 0, -1);
  try {
    log_map(n, s);
    FAIL("expected AntipodalPoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AntipodalPoints);
  }
  CHECK_THROWS_AS(distance(Point::reference(Geometry::euclidean), n), Error);
}

TEST_CASE("angle and orientation") {
  for (Geometry g : kAll) {
    PolarFrame f(Point::reference(g));
    Point a = f.at(0.3, 0.0), b = f.at(0.4, 1.1);
    CHECK(angle(a, f.center(), b) == doctest::Approx(1.1));
    CHECK(orientation(f.center(), a, b) > 0);
    CHECK(orientation(f.center(), b, a) < 0);
  }
}

TEST_CASE("law of cosines against direct construction") {
  for (Geometry g : kAll) {
    PolarFrame f(Point::reference(g));
    for (double gamma : {0.3, 1.0, 2.0, 3.0}) {
      Point a = f.at(0.4, 0.0), b = f.at(0.7, gamma);
      CHECK(side_from_cosines(0.4, 0.7, gamma, g) == doctest::Approx(oracle_distance(a, b)).epsilon(1e-10));
    }
  }
}

TEST_CASE("regular triangle circumradius") {
  for (Geometry g : kAll)
    for (double D : {0.01, 0.5, 1.0, 1.4})
      CHECK(regular_triangle_circumradius(D, g) == doctest::Approx(oracle_circumradius(D, g)).epsilon(1e-12));
  CHECK(regular_triangle_circumradius(1.0, Geometry::euclidean) == doctest::Approx(1.0 / std::sqrt(3.0)));
  // Frozen from the bisection oracle above.
  CHECK(regular_triangle_circumradius(1.0, Geometry::hyperbolic) == doctest::Approx(0.5702898).epsilon(1e-7));
  CHECK_THROWS_AS(regular_triangle_circumradius(2.0, Geometry::spherical), Error);
}

TEST_CASE("circle length and disk area") {
  CHECK(circle_length(Geometry::euclidean, 1.0) == doctest::Approx(2 * pi));
  CHECK(circle_length(Geometry::spherical, pi / 2) == doctest::Approx(2 * pi));
  CHECK(circle_length(Geometry::hyperbolic, 1.0) == doctest::Approx(2 * pi * std::sinh(1.0)));
  CHECK(disk_area(Geometry::spherical, pi / 2) == doctest::Approx(2 * pi));
  CHECK(disk_area(Geometry::hyperbolic, 1.0) == doctest::Approx(2 * pi * (std::cosh(1.0) - 1)));
}

TEST_CASE("isometries preserve distance") {
  std::mt19937_64 rng(5);
  for (Geometry g : kAll) {
    for (int k = 0; k < 20; ++k) {
      Point c = random_point(g, rng, 0.5);
      Isometry m = pose_isometry(g, c, 0.7 * k);
      CHECK(distance(m(Point::reference(g)), c) < 1e-12);
      Point a = random_point(g, rng), b = random_point(g, rng);
      CHECK(distance(m(a), m(b)) == doctest::Approx(distance(a, b)).epsilon(1e-10));
      CHECK(distance(m.inverse()(m(a)), a) < 1e-10);
    }
  }
}

TEST_CASE("reflection is an involution fixing its line") {
  std::mt19937_64 rng(9);
  for (Geometry g : kAll) {
    Point z = random_point(g, rng, 0.3);
    Point w = random_point(g, rng, 0.3);
    TangentVec line = log_map(z, w).dir;
    Point x = random_point(g, rng);
    Point rx = reflect(line, x);
    CHECK(distance(reflect(line, rx), x) < 1e-10);
    CHECK(distance(reflect(line, w), w) < 1e-10);
    CHECK(distance(rx, z) == doctest::Approx(distance(x, z)));
  }
}

TEST_CASE("model projections round trip") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    Point h = random_point(Geometry::hyperbolic, rng, 3.0);
    auto uv = to_poincare(h);
    CHECK(uv[0] * uv[0] + uv[1] * uv[1] < 1.0);
    CHECK(distance(from_poincare(uv[0], uv[1]), h) < 1e-9);
    Point s = random_point(Geometry::spherical, rng, 3.0);
    auto st = to_stereographic(s);
    CHECK(distance(from_stereographic(st[0], st[1]), s) < 1e-12);
  }
  try {
    to_poincare(Point::reference(Geometry::spherical));
    FAIL("expected ProjectionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProjectionMismatch);
  }
  CHECK_THROWS_AS(to_stereographic(Point::spherical(0, 0, -1)), Error);
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(Point::from_ambient(Geometry::spherical, Vec3(1, 1, 1)), Error);
  CHECK_THROWS_AS(Point::from_ambient(Geometry::hyperbolic, Vec3(1, 0, 1)), Error);
  Point p = Point::from_ambient(Geometry::spherical, Vec3(0, 0, 1 + 1e-12));
  CHECK(p.ambient().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(geometry_from_string("H2") == Geometry::hyperbolic);
  CHECK_THROWS_AS(geometry_from_string("elliptic"), Error);
}

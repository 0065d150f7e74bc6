#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "cwidth/area.hpp"
#include "cwidth/experiments.hpp"
#include "cwidth/optimize.hpp"

using namespace cwidth;
using std::numbers::pi;

namespace {

const Geometry kAll[] = {Geometry::euclidean, Geometry::spherical, Geometry::hyperbolic};

double width_for(Geometry g) { return g == Geometry::spherical ? pi / 4 : 1.0; }

const ReportRow* find(const SweepReport& r, const std::string& param, const std::string& quantity) {
  for (const ReportRow& row : r.rows)
    if (row.param_name == param && row.quantity == quantity) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("nelder mead on a shifted quadratic") {
  auto f = [](const std::vector<double>& x) {
    return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2) + 0.5;
  };
  NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, 0.5, 1e-10, 5000);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.x[1] == doctest::Approx(-2.0).epsilon(1e-8));
  CHECK(r.value == doctest::Approx(0.5));
}

TEST_CASE("line and linear-quadratic fits") {
  std::vector<double> x = {1, 2, 3, 4, 5}, y;
  for (double v : x) y.push_back(2.5 * v - 1.0);
  LinearFit f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(2.5));
  CHECK(f.intercept == doctest::Approx(-1.0));
  CHECK(f.r_squared == doctest::Approx(1.0));
  std::vector<double> yq;
  for (double v : x) yq.push_back(0.7 * v + 0.2 * v * v);
  auto [a, b] = fit_linear_quadratic(x, yq);
  CHECK(a == doctest::Approx(0.7));
  CHECK(b == doctest::Approx(0.2));
}

TEST_CASE("grids and seeds") {
  std::vector<double> g = log_grid(1e-4, 1e-2, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == doctest::Approx(1e-4));
  CHECK(g[2] == doctest::Approx(1e-3));
  CHECK(g.back() == doctest::Approx(1e-2));
  CHECK(row_seed(7, 3) == row_seed(7, 3));
  CHECK(row_seed(7, 3) != row_seed(7, 4));
  CHECK(row_seed(7, 3) != row_seed(8, 3));
}

TEST_CASE("Blaschke-Lebesgue sweep") {
  for (Geometry g : kAll) {
    SweepReport r = bl_verify(g, width_for(g), 20, 7);
    CHECK(r.pass);
    CHECK(find(r, "summary", "violations")->value == 0.0);
    SweepReport inj = bl_verify(g, width_for(g), 1, 3, true);
    double VU = area(reuleaux_triangle(width_for(g), g)).total;
    CHECK(find(inj, "trial", "area")->value == doctest::Approx(VU).epsilon(1e-9));
  }
}

TEST_CASE("radii sweep") {
  for (Geometry g : kAll) {
    SweepReport r = radii_sweep(g, width_for(g), 20, 11);
    CHECK(r.pass);
    CHECK(find(r, "ball", "circumradius")->value == doctest::Approx(width_for(g) / 2));
  }
}

TEST_CASE("horospherical width check") {
  const Geometry g = Geometry::hyperbolic;
  CHECK(horo_width_check(reuleaux_triangle(1.0, g), 64).pass);
  CHECK(horo_width_check(DiskPolygon::ball(Point::reference(g), 0.5), 64).pass);
  CHECK(horo_width_check(pentagon(1.0, 0.01, g), 64).pass);
  PolarFrame f(Point::reference(g));
  SweepReport lens = horo_width_check(DiskPolygon::build({f.center(), f.at(1.0, 0.0)}, 1.0), 64);
  CHECK_FALSE(lens.pass);
  CHECK(lens.worst_margin >= 0.01);
  CHECK_THROWS_AS(horo_width_check(reuleaux_triangle(1.0, Geometry::euclidean), 8), Error);
}

TEST_CASE("area chain") {
  for (Geometry g : kAll) {
    SweepReport r = area_chain(g, width_for(g), 10);
    CHECK(r.pass);
  }
}

TEST_CASE("best fit Reuleaux triangle") {
  const Geometry g = Geometry::hyperbolic;
  DiskPolygon U = reuleaux_triangle(1.0, g);
  CHECK(best_fit_reuleaux(U).distance <= 1e-7);
  // A moved copy is recovered up to the symmetry group.
  PolarFrame f(Point::reference(g));
  ReuleauxTrianglePose moved{1.0, g, f.at(0.03, 1.0), 0.05};
  BestFit bf = best_fit_reuleaux(reuleaux_triangle(moved));
  CHECK(bf.distance <= 1e-6);
  CHECK(distance(bf.pose.center, moved.center) < 1e-5);
  CHECK(std::remainder(bf.pose.rotation - moved.rotation, 2 * pi / 3) == doctest::Approx(0.0).epsilon(1e-5));
  // Ball of diameter D: the best triangle is concentric; oracle max(R - D/2, D/2 - r).
  DiskPolygon B = DiskPolygon::ball(Point::reference(g), 0.5);
  double R = regular_triangle_circumradius(1.0, g);
  CHECK(best_fit_reuleaux(B).distance == doctest::Approx(std::max(R - 0.5, 0.5 - (1.0 - R))).epsilon(1e-5));
}

TEST_CASE("stability fit without the Hausdorff search") {
  StabilityOptions o;
  o.eta_grid = log_grid(1e-4, 1e-2, 5);
  o.rho_points = 6;
  o.fit_hausdorff = false;
  SweepReport r = stability_fit(Geometry::euclidean, 1.0, o);
  CHECK(r.pass);
  CHECK(find(r, "fit_a_area", "slope")->value > 0);
  CHECK(find(r, "fit_c_q_tilde", "ratio_min")->value > 0);
  CHECK(find(r, "fit_angle_deficit", "slope")->value > 0);
}

TEST_CASE("CSV output") {
  SweepReport r;
  r.experiment = "demo";
  r.g = Geometry::spherical;
  r.D = 0.1;
  r.add({"eta", 1e-4, "area", 1.0 / 3.0, -0.5, true});
  r.add({"", NAN, "violations", 2, 2, false});
  CHECK_FALSE(r.pass);
  CHECK(r.worst_margin == 2);
  std::ostringstream s;
  write_csv_header(s);
  write_csv(s, r);
  CHECK(s.str() ==
        "experiment,geometry,D,param_name,param_value,quantity,value,margin,pass\n"
        "demo,spherical,0.10000000000000001,eta,0.0001,area,0.33333333333333331,-0.5,true\n"
        "demo,spherical,0.10000000000000001,,,violations,2,2,false\n");
}

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "cwidth/body.hpp"

namespace cwidth {

struct ReuleauxTrianglePose {
  double D;
  Geometry g;
  Point center;
  double rotation;
};

struct RegularTriangle {
  std::array<Point, 3> v;
  Point center;
};

RegularTriangle regular_triangle(double D, Geometry g, const Point& center, double rotation);
DiskPolygon reuleaux_triangle(const ReuleauxTrianglePose& pose);
// Reference pose: circumcenter at the reference point, first vertex at angle 0.
DiskPolygon reuleaux_triangle(double D, Geometry g);
// r(U_D) = D - R(U_D).
double reuleaux_inradius(double D, Geometry g);

// Points of the W~/Q~ constructions around p~ (the reference point).
// Indices are 0-based: q[i], t[i]; z[i][j], w[i][j] for i != j (Q~ only).
struct TildeFrame {
  double D = 0.0;
  double rho = 0.0;
  Geometry g = Geometry::euclidean;
  Point p;
  std::array<Point, 3> v;
  std::array<Point, 3> q;
  std::array<Point, 3> t;
  std::array<std::array<std::optional<Point>, 3>, 3> z;
  std::array<std::array<std::optional<Point>, 3>, 3> w;
};

TildeFrame tilde_frame(double D, double rho, Geometry g);
DiskPolygon w_tilde(double D, double rho, Geometry g);
DiskPolygon q_tilde(double D, double rho, Geometry g);
// Area of the piece of Q~ around q~_1 outside B(p~, rho).
double gamma_tilde_area(double D, double rho, Geometry g);

struct PentagonPoints {
  std::array<Point, 3> v;
  Point p;
  Point u3;
  Point u3_eta;
  Point v31;
  Point v32;
};

double pentagon_eta_max(double D, Geometry g);
PentagonPoints pentagon_points(double D, double eta, Geometry g);
DiskPolygon pentagon(double D, double eta, Geometry g);

std::vector<Point> random_seed_points(double D, Geometry g, int n_seeds, std::uint64_t seed);
DiskPolygon random_constant_width(double D, Geometry g, int n_seeds, std::uint64_t seed,
                                  bool inject_triangle = false);

}  // namespace cwidth

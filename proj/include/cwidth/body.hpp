#pragma once

#include <optional>
#include <vector>

#include "cwidth/circles.hpp"

namespace cwidth {

// A convex body bounded by circular arcs traversed counterclockwise.
//
// The usual case is an intersection of radius-D disks (build). Two other
// shapes share the same measuring API: a single closed disk (ball) and an
// explicit arc chain with mixed radii (from_arcs).
class DiskPolygon {
 public:
  enum class Kind { intersection, ball, arc_chain };

  static DiskPolygon build(const std::vector<Point>& centers, double D);
  // B(center, radius); its nominal width is 2 * radius.
  static DiskPolygon ball(const Point& center, double radius);
  // Convex arc chain; consecutive arcs must share endpoints.
  static DiskPolygon from_arcs(Geometry g, double width, std::vector<Arc> arcs);

  Kind kind() const { return kind_; }
  Geometry geometry() const { return g_; }
  double width() const { return width_; }
  const std::vector<Point>& centers() const { return centers_; }
  const std::vector<bool>& active() const { return active_; }
  std::vector<Point> active_centers() const;
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<Point> vertices() const;
  double perimeter() const;

  bool contains(const Point& x, double tol = 1e-12) const;
  // Geodesic distance from x to the body (0 inside).
  double distance_to(const Point& x) const;
  // max over y in the body of distance(x, y).
  double farthest_distance(const Point& x) const;
  Point interior_point() const;

  // Boundary point at arc-length parameter s in [0, perimeter).
  Point boundary_point(double s) const;
  std::vector<double> boundary_parameters(int n) const;
  std::vector<Point> sample_boundary(int n) const;

 private:
  Kind kind_ = Kind::intersection;
  Geometry g_ = Geometry::euclidean;
  double width_ = 0.0;
  std::vector<Point> centers_;
  std::vector<bool> active_;
  std::vector<Arc> arcs_;
  std::vector<double> cum_length_;  // prefix sums of arc lengths

  void finish();
};

struct DiameterResult {
  double value;
  Point a, b;
};

struct Disk {
  Point center;
  double radius;
};

struct RadiiReport {
  double inradius;
  Point incenter;
  double circumradius;
  Point circumcenter;
};

enum class CompletenessMode { fixpoint, farthest, dekster };

struct CompletenessResult {
  bool complete;
  double margin;
};

double point_set_diameter(const std::vector<Point>& pts);
DiameterResult diameter(const DiskPolygon& body);
DiskPolygon t_operator(const std::vector<Point>& points, double D);

CompletenessResult is_complete(const DiskPolygon& body, CompletenessMode mode, double tol = 1e-7);

struct CompletionStats {
  int rounds = 0;
  double margin = 0.0;
};
DiskPolygon complete(const std::vector<Point>& points, double D, CompletionStats* stats = nullptr);

Disk min_enclosing_disk(std::vector<Point> pts);
Disk circumdisk(const DiskPolygon& body);
Disk indisk(const DiskPolygon& body);
RadiiReport radii(const DiskPolygon& body);

// Boundary sampling (plus exact vertices) with golden-section refinement of the top gaps.
double hausdorff(const DiskPolygon& a, const DiskPolygon& b, int samples = 2048);
// One-sided part: max over boundary of `from` of the distance to `to`.
double hausdorff_one_sided(const DiskPolygon& from, const DiskPolygon& to, int samples = 2048);

}  // namespace cwidth

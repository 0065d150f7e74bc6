#pragma once

#include <vector>

#include "cwidth/surface.hpp"

namespace cwidth {

class DiskPolygon;

class Circle {
 public:
  Circle(const Point& center, double radius);

  const Point& center() const { return frame_.center(); }
  double radius() const { return radius_; }
  Geometry geometry() const { return center().geometry(); }
  const PolarFrame& frame() const { return frame_; }
  Point at(double phi) const { return frame_.at(radius_, phi); }
  double angle_of(const Point& x) const { return frame_.angle_of(x); }
  double length() const { return circle_length(geometry(), radius_); }

 private:
  PolarFrame frame_;
  double radius_;
};

// Wraps an angle into [0, 2pi).
double wrap_angle(double a);

// Arc of a circle swept from start_angle by `sweep` radians (positive = ccw).
class Arc {
 public:
  Arc(const Circle& circle, double start_angle, double sweep);
  static Arc from_endpoints(const Circle& circle, const Point& start, const Point& end, bool ccw);

  const Circle& circle() const { return circle_; }
  double start_angle() const { return start_angle_; }
  double sweep() const { return sweep_; }
  double arc_angle() const { return std::abs(sweep_); }
  bool ccw() const { return sweep_ > 0; }
  const Point& start() const { return start_; }
  const Point& end() const { return end_; }
  // s in [0, 1] along the arc.
  Point at(double s) const { return circle_.at(start_angle_ + s * sweep_); }
  // Fraction along the arc of the circle angle phi, or a negative value if phi is outside.
  double fraction_of_angle(double phi, double tol = 0.0) const;
  Arc reversed() const { return Arc(circle_, start_angle_ + sweep_, -sweep_); }

 private:
  Circle circle_;
  double start_angle_;
  double sweep_;
  Point start_;
  Point end_;
};

double arc_length(const Arc& a);

// Points on both circles, left of the directed center geodesic first.
std::vector<Point> circle_intersect(const Circle& c1, const Circle& c2);

// The two radius-D circles through q that contain B(p, rho) and touch it from inside.
std::vector<Circle> tangent_disks(const Point& p, double rho, const Point& q, double D);

struct Horoball {
  Vec3 ideal;   // null vector with e-component 1
  double level;
  Horoball(const Vec3& ideal, double level);
  bool contains(const Point& z) const;
};

Vec3 ideal_point(double phi);

double horoball_width(const Horoball& outer, const Horoball& inner);
double horospherical_width(const DiskPolygon& body, const Vec3& ideal);
double horospherical_width(const std::vector<Point>& points, const Vec3& ideal);
double horospherical_width_segment(const Point& a, const Point& b, const Vec3& ideal);

}  // namespace cwidth

#pragma once

// Metric kernel for E², S² and H².
//
// Every point is stored as a 3-vector. S² and H² use their usual ambient
// coordinates (unit sphere, upper sheet of the hyperboloid t² - x² - y² = 1).
// E² points (x, y) are stored as (x, y, 1), so the reference point is (0,0,1)
// in all three geometries and isometries are 3x3 matrices everywhere.

#include <Eigen/Dense>

#include <array>
#include <string_view>
#include <vector>

#include "cwidth/error.hpp"

namespace cwidth {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

enum class Geometry : int { hyperbolic = -1, euclidean = 0, spherical = 1 };

inline int curvature(Geometry g) { return static_cast<int>(g); }
std::string_view to_string(Geometry g);
Geometry geometry_from_string(std::string_view s);

// Tolerance inside which out-of-domain arguments of acos/asin/acosh are clamped.
inline constexpr double kClampTol = 1e-9;

double clamped_acos(double x);
double clamped_asin(double x);
double clamped_acosh(double x);

class Point {
 public:
  Point() = default;

  static Point euclidean(double x, double y);
  static Point spherical(double x, double y, double z);
  static Point hyperbolic(double x, double y, double t);
  // Validates (within 1e-9) and projects back onto the model surface.
  static Point from_ambient(Geometry g, const Vec3& v);
  // 2 coordinates for E², 3 otherwise.
  static Point from_coords(Geometry g, const std::vector<double>& c);
  static Point reference(Geometry g);

  Geometry geometry() const { return g_; }
  const Vec3& ambient() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  std::vector<double> coords() const;

 private:
  Point(Geometry g, const Vec3& v) : g_(g), v_(v) {}
  Geometry g_ = Geometry::euclidean;
  Vec3 v_ = Vec3(0, 0, 1);
};

struct TangentVec {
  Point base;
  Vec3 dir;  // E²: (u0, u1, 0)
};

TangentVec make_tangent(const Point& base, const Vec3& dir);

// ts - <x0, y0> with the last coordinate playing the role of t.
double bilinear_form(const Vec3& x, const Vec3& y);
// Scalar product of tangent vectors: <.,.> on E², S²; -B on H².
double tangent_dot(Geometry g, const Vec3& u, const Vec3& v);
double tangent_norm(Geometry g, const Vec3& u);

void require_same(const Point& a, const Point& b);

double distance(const Point& x, const Point& y);
Point exp_map(const TangentVec& u, double t);
Point exp_map(const Point& z, const Vec3& u, double t);

struct LogResult {
  TangentVec dir;
  double length;
};
LogResult log_map(const Point& z, const Point& x);

double angle(const Point& x, const Point& y, const Point& z);

// Positive when x is to the left of the directed geodesic a -> b.
double orientation(const Point& a, const Point& b, const Point& x);

// Point at arc-length fraction s of the segment [a, b].
Point geodesic_point(const Point& a, const Point& b, double s);
Point midpoint(const Point& a, const Point& b);

double side_from_cosines(double a, double b, double gamma, Geometry g);
double regular_triangle_circumradius(double D, Geometry g);

// cos/sin-like "generalized" trig for sector areas and circle lengths.
double circle_length(Geometry g, double r);
double disk_area(Geometry g, double r);

class Isometry {
 public:
  Isometry() = default;
  Isometry(Geometry g, const Mat3& m) : g_(g), m_(m) {}
  static Isometry identity(Geometry g) { return {g, Mat3::Identity()}; }

  Geometry geometry() const { return g_; }
  const Mat3& matrix() const { return m_; }
  Point operator()(const Point& x) const;
  Vec3 apply_tangent(const Vec3& u) const { return m_ * u; }
  Isometry inverse() const;
  Isometry operator*(const Isometry& o) const { return {g_, m_ * o.m_}; }

 private:
  Geometry g_ = Geometry::euclidean;
  Mat3 m_ = Mat3::Identity();
};

// Maps the reference point to `center`, with the reference frame rotated by theta.
Isometry pose_isometry(Geometry g, const Point& center, double theta);
Isometry rotation_about_reference(Geometry g, double theta);

Point reflect(const TangentVec& line, const Point& x);

// Polar coordinates in the frame of pose_isometry(center, 0).
class PolarFrame {
 public:
  PolarFrame() = default;
  explicit PolarFrame(const Point& center);
  const Point& center() const { return center_; }
  Point at(double r, double phi) const;
  double angle_of(const Point& x) const;
  // Unit tangent at the center pointing in direction phi.
  Vec3 direction(double phi) const;
  Vec3 to_local(const Point& x) const { return to_local_ * x.ambient(); }
  const Mat3& to_world() const { return to_world_; }

 private:
  Point center_;
  Mat3 to_world_ = Mat3::Identity();
  Mat3 to_local_ = Mat3::Identity();
};

// Point of the reference frame at polar coordinates (r, phi), ambient form.
Vec3 reference_polar(Geometry g, double r, double phi);

std::array<double, 2> to_poincare(const Point& x);
Point from_poincare(double u, double v);
std::array<double, 2> to_stereographic(const Point& x);
Point from_stereographic(double u, double v);

}  // namespace cwidth

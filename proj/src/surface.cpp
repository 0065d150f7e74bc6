#include "cwidth/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cwidth {

using std::numbers::pi;

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MismatchedGeometry: return "MismatchedGeometry";
    case ErrorCode::NonUnitTangent: return "NonUnitTangent";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::AntipodalPoints: return "AntipodalPoints";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ProjectionPole: return "ProjectionPole";
    case ErrorCode::ConcentricCircles: return "ConcentricCircles";
    case ErrorCode::DifferentIdealPoints: return "DifferentIdealPoints";
    case ErrorCode::NestedViolation: return "NestedViolation";
    case ErrorCode::EmptyBody: return "EmptyBody";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::DiameterExceeded: return "DiameterExceeded";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::EndpointOffCircle: return "EndpointOffCircle";
    case ErrorCode::EtaTooLarge: return "EtaTooLarge";
    case ErrorCode::ProjectionMismatch: return "ProjectionMismatch";
    case ErrorCode::InvalidFile: return "InvalidFile";
  }
  return "Unknown";
}

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::hyperbolic: return "hyperbolic";
    case Geometry::euclidean: return "euclidean";
    case Geometry::spherical: return "spherical";
  }
  return "euclidean";
}

Geometry geometry_from_string(std::string_view s) {
  if (s == "euclidean" || s == "E2") return Geometry::euclidean;
  if (s == "spherical" || s == "S2") return Geometry::spherical;
  if (s == "hyperbolic" || s == "H2") return Geometry::hyperbolic;
  fail(ErrorCode::DomainError, "unknown geometry '" + std::string(s) + "'");
}

double clamped_acos(double x) {
  if (x > 1.0 + kClampTol || x < -1.0 - kClampTol)
    fail(ErrorCode::DomainError, "acos argument out of range: " + std::to_string(x));
  return std::acos(std::clamp(x, -1.0, 1.0));
}

double clamped_asin(double x) {
  if (x > 1.0 + kClampTol || x < -1.0 - kClampTol)
    fail(ErrorCode::DomainError, "asin argument out of range: " + std::to_string(x));
  return std::asin(std::clamp(x, -1.0, 1.0));
}

double clamped_acosh(double x) {
  if (x < 1.0 - kClampTol)
    fail(ErrorCode::DomainError, "acosh argument out of range: " + std::to_string(x));
  return std::acosh(std::max(x, 1.0));
}

namespace {

Vec3 project_onto(Geometry g, const Vec3& v) {
  switch (g) {
    case Geometry::euclidean: return {v[0], v[1], 1.0};
    case Geometry::spherical: return v / v.norm();
    case Geometry::hyperbolic:
      return {v[0], v[1], std::sqrt(1.0 + v[0] * v[0] + v[1] * v[1])};
  }
  return v;
}

}  // namespace

Point Point::euclidean(double x, double y) { return {Geometry::euclidean, Vec3(x, y, 1.0)}; }

Point Point::spherical(double x, double y, double z) {
  return from_ambient(Geometry::spherical, Vec3(x, y, z));
}

Point Point::hyperbolic(double x, double y, double t) {
  return from_ambient(Geometry::hyperbolic, Vec3(x, y, t));
}

Point Point::from_ambient(Geometry g, const Vec3& v) {
  if (!v.allFinite()) fail(ErrorCode::DomainError, "non-finite coordinates");
  switch (g) {
    case Geometry::euclidean:
      break;
    case Geometry::spherical:
      if (std::abs(v.norm() - 1.0) > kClampTol)
        fail(ErrorCode::DomainError, "point is not on the unit sphere");
      break;
    case Geometry::hyperbolic: {
      double b = bilinear_form(v, v);
      if (v[2] <= 0.0 || std::abs(b - 1.0) > kClampTol * std::max(1.0, v[2] * v[2]))
        fail(ErrorCode::DomainError, "point is not on the upper hyperboloid sheet");
      break;
    }
  }
  return {g, project_onto(g, v)};
}

Point Point::from_coords(Geometry g, const std::vector<double>& c) {
  if (g == Geometry::euclidean) {
    if (c.size() != 2) fail(ErrorCode::DomainError, "euclidean points need 2 coordinates");
    return euclidean(c[0], c[1]);
  }
  if (c.size() != 3) fail(ErrorCode::DomainError, "spherical/hyperbolic points need 3 coordinates");
  return from_ambient(g, Vec3(c[0], c[1], c[2]));
}

Point Point::reference(Geometry g) { return {g, Vec3(0, 0, 1)}; }

std::vector<double> Point::coords() const {
  if (g_ == Geometry::euclidean) return {v_[0], v_[1]};
  return {v_[0], v_[1], v_[2]};
}

double bilinear_form(const Vec3& x, const Vec3& y) {
  return x[2] * y[2] - x[0] * y[0] - x[1] * y[1];
}

double tangent_dot(Geometry g, const Vec3& u, const Vec3& v) {
  switch (g) {
    case Geometry::euclidean: return u[0] * v[0] + u[1] * v[1];
    case Geometry::spherical: return u.dot(v);
    case Geometry::hyperbolic: return -bilinear_form(u, v);
  }
  return 0.0;
}

double tangent_norm(Geometry g, const Vec3& u) {
  return std::sqrt(std::max(0.0, tangent_dot(g, u, u)));
}

void require_same(const Point& a, const Point& b) {
  if (a.geometry() != b.geometry())
    fail(ErrorCode::MismatchedGeometry, "points live on different surfaces");
}

TangentVec make_tangent(const Point& base, const Vec3& dir) {
  Vec3 d = dir;
  switch (base.geometry()) {
    case Geometry::euclidean:
      d[2] = 0.0;
      break;
    case Geometry::spherical: {
      double c = d.dot(base.ambient());
      if (std::abs(c) > kClampTol) fail(ErrorCode::DomainError, "vector is not tangent");
      d -= c * base.ambient();
      break;
    }
    case Geometry::hyperbolic: {
      double c = bilinear_form(d, base.ambient());
      if (std::abs(c) > kClampTol * std::max(1.0, base.ambient()[2]))
        fail(ErrorCode::DomainError, "vector is not tangent");
      d -= c * base.ambient();
      break;
    }
  }
  return {base, d};
}

double distance(const Point& x, const Point& y) {
  require_same(x, y);
  const Vec3 d = x.ambient() - y.ambient();
  switch (x.geometry()) {
    case Geometry::euclidean:
      return std::hypot(d[0], d[1]);
    case Geometry::spherical:
      return 2.0 * clamped_asin(d.norm() / 2.0);
    case Geometry::hyperbolic: {
      // -B(x-y, x-y) = 4 sinh²(d/2); avoids acosh near 1.
      double q = std::max(0.0, -bilinear_form(d, d));
      return 2.0 * std::asinh(std::sqrt(q) / 2.0);
    }
  }
  return 0.0;
}

Point exp_map(const TangentVec& u, double t) { return exp_map(u.base, u.dir, t); }

Point exp_map(const Point& z, const Vec3& u_in, double t) {
  const Geometry g = z.geometry();
  Vec3 u = make_tangent(z, u_in).dir;
  if (std::abs(tangent_norm(g, u) - 1.0) > kClampTol)
    fail(ErrorCode::NonUnitTangent, "exp_map needs a unit tangent");
  const Vec3& p = z.ambient();
  switch (g) {
    case Geometry::euclidean:
      return Point::euclidean(p[0] + t * u[0], p[1] + t * u[1]);
    case Geometry::spherical:
      return Point::from_ambient(g, project_onto(g, p * std::cos(t) + u * std::sin(t)));
    case Geometry::hyperbolic:
      return Point::from_ambient(g, project_onto(g, p * std::cosh(t) + u * std::sinh(t)));
  }
  return z;
}

LogResult log_map(const Point& z, const Point& x) {
  require_same(z, x);
  const Geometry g = z.geometry();
  const Vec3& p = z.ambient();
  const Vec3& q = x.ambient();
  double t = distance(z, x);
  if (t == 0.0) fail(ErrorCode::CoincidentPoints, "log_map of coincident points");
  Vec3 w;
  switch (g) {
    case Geometry::euclidean:
      w = Vec3(q[0] - p[0], q[1] - p[1], 0.0);
      break;
    case Geometry::spherical:
      if (t > pi - 1e-12) fail(ErrorCode::AntipodalPoints, "log_map of antipodal points");
      w = q - q.dot(p) * p;
      break;
    case Geometry::hyperbolic:
      w = q - bilinear_form(q, p) * p;
      break;
  }
  double n = tangent_norm(g, w);
  if (n == 0.0) fail(ErrorCode::CoincidentPoints, "log_map direction undefined");
  return {TangentVec{z, w / n}, t};
}

double angle(const Point& x, const Point& y, const Point& z) {
  require_same(x, y);
  require_same(y, z);
  const Geometry g = y.geometry();
  Vec3 u = log_map(y, x).dir.dir;
  Vec3 v = log_map(y, z).dir.dir;
  return 2.0 * std::atan2(tangent_norm(g, u - v), tangent_norm(g, u + v));
}

double orientation(const Point& a, const Point& b, const Point& x) {
  require_same(a, b);
  require_same(a, x);
  return a.ambient().dot(b.ambient().cross(x.ambient()));
}

Point geodesic_point(const Point& a, const Point& b, double s) {
  require_same(a, b);
  if (distance(a, b) == 0.0) return a;
  LogResult l = log_map(a, b);
  return exp_map(l.dir, s * l.length);
}

Point midpoint(const Point& a, const Point& b) { return geodesic_point(a, b, 0.5); }

double side_from_cosines(double a, double b, double gamma, Geometry g) {
  if (a < 0.0 || b < 0.0 || gamma < -kClampTol || gamma > pi + kClampTol)
    fail(ErrorCode::DomainError, "side_from_cosines: invalid sides or angle");
  gamma = std::clamp(gamma, 0.0, pi);
  double s2 = std::sin(gamma / 2.0);
  s2 *= s2;
  // Half-angle forms of the three laws of cosines; exact at gamma = 0 and pi.
  switch (g) {
    case Geometry::euclidean:
      return std::sqrt((a - b) * (a - b) + 4.0 * a * b * s2);
    case Geometry::spherical: {
      if (a + b >= pi) fail(ErrorCode::DomainError, "side_from_cosines: a + b >= pi on S2");
      double h = std::sin((a - b) / 2.0);
      return 2.0 * clamped_asin(std::sqrt(h * h + std::sin(a) * std::sin(b) * s2));
    }
    case Geometry::hyperbolic: {
      double h = std::sinh((a - b) / 2.0);
      return 2.0 * std::asinh(std::sqrt(h * h + std::sinh(a) * std::sinh(b) * s2));
    }
  }
  return 0.0;
}

double regular_triangle_circumradius(double D, Geometry g) {
  if (!(D > 0.0)) fail(ErrorCode::DomainError, "width must be positive");
  const double s60 = std::sqrt(3.0) / 2.0;
  switch (g) {
    case Geometry::euclidean:
      return D / std::sqrt(3.0);
    case Geometry::spherical:
      if (D >= pi / 2) fail(ErrorCode::DomainError, "spherical width must be < pi/2");
      return std::asin(std::sin(D / 2.0) / s60);
    case Geometry::hyperbolic:
      return std::asinh(std::sinh(D / 2.0) / s60);
  }
  return 0.0;
}

double circle_length(Geometry g, double r) {
  switch (g) {
    case Geometry::euclidean: return 2.0 * pi * r;
    case Geometry::spherical: return 2.0 * pi * std::sin(r);
    case Geometry::hyperbolic: return 2.0 * pi * std::sinh(r);
  }
  return 0.0;
}

double disk_area(Geometry g, double r) {
  switch (g) {
    case Geometry::euclidean: return pi * r * r;
    case Geometry::spherical: {
      double s = std::sin(r / 2.0);
      return 4.0 * pi * s * s;
    }
    case Geometry::hyperbolic: {
      double s = std::sinh(r / 2.0);
      return 4.0 * pi * s * s;
    }
  }
  return 0.0;
}

Point Isometry::operator()(const Point& x) const {
  if (x.geometry() != g_) fail(ErrorCode::MismatchedGeometry, "isometry/point geometry mismatch");
  return Point::from_ambient(g_, project_onto(g_, m_ * x.ambient()));
}

Isometry Isometry::inverse() const {
  switch (g_) {
    case Geometry::spherical:
      return {g_, m_.transpose()};
    case Geometry::hyperbolic: {
      Mat3 J = Vec3(-1, -1, 1).asDiagonal();
      return {g_, J * m_.transpose() * J};
    }
    case Geometry::euclidean: {
      Mat3 inv = Mat3::Identity();
      Eigen::Matrix2d rt = m_.topLeftCorner<2, 2>().transpose();
      inv.topLeftCorner<2, 2>() = rt;
      inv.topRightCorner<2, 1>() = -rt * m_.topRightCorner<2, 1>();
      return {g_, inv};
    }
  }
  return *this;
}

Isometry rotation_about_reference(Geometry g, double theta) {
  Mat3 r = Mat3::Identity();
  double c = std::cos(theta), s = std::sin(theta);
  r(0, 0) = c;
  r(0, 1) = -s;
  r(1, 0) = s;
  r(1, 1) = c;
  return {g, r};
}

Isometry pose_isometry(Geometry g, const Point& center, double theta) {
  if (center.geometry() != g) fail(ErrorCode::MismatchedGeometry, "pose center geometry mismatch");
  const Vec3& c = center.ambient();
  const double s0 = c[0], s1 = c[1], t = c[2];
  Mat3 m = Mat3::Identity();
  switch (g) {
    case Geometry::euclidean:
      m(0, 2) = s0;
      m(1, 2) = s1;
      break;
    case Geometry::spherical: {
      if (1.0 + t < 1e-12) {
        m = Vec3(1, -1, -1).asDiagonal();
        break;
      }
      double k = 1.0 / (1.0 + t);
      m << 1 - k * s0 * s0, -k * s0 * s1, s0,
           -k * s0 * s1, 1 - k * s1 * s1, s1,
           -s0, -s1, t;
      break;
    }
    case Geometry::hyperbolic: {
      double k = 1.0 / (1.0 + t);
      m << 1 + k * s0 * s0, k * s0 * s1, s0,
           k * s0 * s1, 1 + k * s1 * s1, s1,
           s0, s1, t;
      break;
    }
  }
  return Isometry(g, m) * rotation_about_reference(g, theta);
}

Point reflect(const TangentVec& line, const Point& x) {
  const Geometry g = line.base.geometry();
  require_same(line.base, x);
  Vec3 ul = pose_isometry(g, line.base, 0.0).inverse().apply_tangent(line.dir);
  double th = std::atan2(ul[1], ul[0]);
  Isometry pose = pose_isometry(g, line.base, th);
  Isometry flip(g, Vec3(1, -1, 1).asDiagonal());
  return (pose * flip * pose.inverse())(x);
}

PolarFrame::PolarFrame(const Point& center) : center_(center) {
  Isometry p = pose_isometry(center.geometry(), center, 0.0);
  to_world_ = p.matrix();
  to_local_ = p.inverse().matrix();
}

Vec3 reference_polar(Geometry g, double r, double phi) {
  double c = std::cos(phi), s = std::sin(phi);
  switch (g) {
    case Geometry::euclidean: return {r * c, r * s, 1.0};
    case Geometry::spherical: return {std::sin(r) * c, std::sin(r) * s, std::cos(r)};
    case Geometry::hyperbolic: return {std::sinh(r) * c, std::sinh(r) * s, std::cosh(r)};
  }
  return {0, 0, 1};
}

Point PolarFrame::at(double r, double phi) const {
  const Geometry g = center_.geometry();
  return Point::from_ambient(g, project_onto(g, to_world_ * reference_polar(g, r, phi)));
}

double PolarFrame::angle_of(const Point& x) const {
  Vec3 y = to_local_ * x.ambient();
  return std::atan2(y[1], y[0]);
}

Vec3 PolarFrame::direction(double phi) const {
  return to_world_ * Vec3(std::cos(phi), std::sin(phi), 0.0);
}

std::array<double, 2> to_poincare(const Point& x) {
  if (x.geometry() != Geometry::hyperbolic)
    fail(ErrorCode::ProjectionMismatch, "Poincare projection needs a hyperbolic point");
  const Vec3& v = x.ambient();
  return {v[0] / (1.0 + v[2]), v[1] / (1.0 + v[2])};
}

Point from_poincare(double u, double v) {
  double r2 = u * u + v * v;
  if (!(r2 < 1.0)) fail(ErrorCode::DomainError, "point outside the Poincare disk");
  double k = 1.0 / (1.0 - r2);
  return Point::hyperbolic(2.0 * u * k, 2.0 * v * k, (1.0 + r2) * k);
}

std::array<double, 2> to_stereographic(const Point& x) {
  if (x.geometry() != Geometry::spherical)
    fail(ErrorCode::ProjectionMismatch, "stereographic projection needs a spherical point");
  const Vec3& v = x.ambient();
  if (1.0 + v[2] < 1e-12) fail(ErrorCode::ProjectionPole, "south pole has no stereographic image");
  return {v[0] / (1.0 + v[2]), v[1] / (1.0 + v[2])};
}

Point from_stereographic(double u, double v) {
  double r2 = u * u + v * v;
  double k = 1.0 / (1.0 + r2);
  return Point::spherical(2.0 * u * k, 2.0 * v * k, (1.0 - r2) * k);
}

}  // namespace cwidth

#include "cwidth/circles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwidth/body.hpp"

namespace cwidth {

using std::numbers::pi;

Circle::Circle(const Point& center, double radius) : frame_(center), radius_(radius) {
  if (!(radius > 0.0)) fail(ErrorCode::DomainError, "circle radius must be positive");
  if (center.geometry() == Geometry::spherical && radius >= pi)
    fail(ErrorCode::DomainError, "spherical circle radius must be < pi");
}

double wrap_angle(double a) {
  double w = std::fmod(a, 2.0 * pi);
  if (w < 0.0) w += 2.0 * pi;
  if (w >= 2.0 * pi) w = 0.0;
  return w;
}

Arc::Arc(const Circle& circle, double start_angle, double sweep)
    : circle_(circle), start_angle_(start_angle), sweep_(sweep),
      start_(circle.at(start_angle)), end_(circle.at(start_angle + sweep)) {
  if (!(std::abs(sweep) > 0.0) || std::abs(sweep) > 2.0 * pi + 1e-12)
    fail(ErrorCode::DomainError, "arc angle must lie in (0, 2pi]");
}

Arc Arc::from_endpoints(const Circle& circle, const Point& start, const Point& end, bool ccw) {
  const double r = circle.radius();
  if (std::abs(distance(circle.center(), start) - r) > 1e-9 ||
      std::abs(distance(circle.center(), end) - r) > 1e-9)
    fail(ErrorCode::EndpointOffCircle, "arc endpoint is not on its circle");
  double a0 = circle.angle_of(start);
  double a1 = circle.angle_of(end);
  double sweep = ccw ? wrap_angle(a1 - a0) : -wrap_angle(a0 - a1);
  if (sweep == 0.0) sweep = ccw ? 2.0 * pi : -2.0 * pi;
  return Arc(circle, a0, sweep);
}

double Arc::fraction_of_angle(double phi, double tol) const {
  double off = sweep_ > 0 ? wrap_angle(phi - start_angle_) : wrap_angle(start_angle_ - phi);
  double len = std::abs(sweep_);
  if (off <= len + tol) return std::min(off / len, 1.0);
  if (2.0 * pi - off <= tol) return 0.0;
  return -1.0;
}

double arc_length(const Arc& a) {
  const double r = a.circle().radius();
  switch (a.circle().geometry()) {
    case Geometry::euclidean: return a.arc_angle() * r;
    case Geometry::spherical: return a.arc_angle() * std::sin(r);
    case Geometry::hyperbolic: return a.arc_angle() * std::sinh(r);
  }
  return 0.0;
}

namespace {

// S2/H2: two linear level sets of the ambient form cut the quadric; 2x2 solve plus one quadratic.
std::vector<Point> ambient_intersect(const Circle& c1, const Circle& c2, double d) {
  const Geometry g = c1.geometry();
  const Vec3& a = c1.center().ambient();
  const Vec3& b = c2.center().ambient();
  const double r1 = c1.radius(), r2 = c2.radius();
  const bool sph = g == Geometry::spherical;
  const double G = sph ? a.dot(b) : bilinear_form(a, b);
  const double k1 = sph ? std::cos(r1) : std::cosh(r1);
  const double k2 = sph ? std::cos(r2) : std::cosh(r2);
  const double det = 1.0 - G * G;
  const double x = (k1 - G * k2) / det;
  const double y = (k2 - G * k1) / det;
  Vec3 m = x * a + y * b;
  Vec3 n = a.cross(b);
  double gam2;
  if (sph) {
    n /= n.norm();
    gam2 = 1.0 - m.squaredNorm();
  } else {
    n = Vec3(-n[0], -n[1], n[2]);  // J (a x b) is B-orthogonal to a and b
    n /= std::sqrt(-bilinear_form(n, n));
    gam2 = bilinear_form(m, m) - 1.0;
  }
  const double tol = 1e-9;
  if (std::abs(d - (r1 + r2)) <= tol || std::abs(d - std::abs(r1 - r2)) <= tol || gam2 <= 0.0) {
    if (sph) return {Point::from_ambient(g, m / m.norm())};
    return {Point::from_ambient(g, m / std::sqrt(bilinear_form(m, m)))};
  }
  double gam = std::sqrt(gam2);
  Vec3 p = m + gam * n, q = m - gam * n;
  auto fix = [&](const Vec3& v) {
    return sph ? Point::from_ambient(g, v / v.norm())
               : Point::from_ambient(g, v / std::sqrt(bilinear_form(v, v)));
  };
  return {fix(p), fix(q)};
}

}  // namespace

std::vector<Point> circle_intersect(const Circle& c1, const Circle& c2) {
  require_same(c1.center(), c2.center());
  const Geometry g = c1.geometry();
  const double r1 = c1.radius(), r2 = c2.radius();
  const double d = distance(c1.center(), c2.center());
  if (d == 0.0) fail(ErrorCode::ConcentricCircles, "circles share a center");
  if (g == Geometry::spherical && d > pi - 1e-12)
    fail(ErrorCode::AntipodalPoints, "antipodal circle centers");
  const double tol = 1e-9;
  if (d > r1 + r2 + tol || d < std::abs(r1 - r2) - tol) return {};

  std::vector<Point> out;
  if (g == Geometry::euclidean) {
    const Vec3& p = c1.center().ambient();
    const Vec3& q = c2.center().ambient();
    double ex = (q[0] - p[0]) / d, ey = (q[1] - p[1]) / d;
    double a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    double h2 = r1 * r1 - a * a;
    double mx = p[0] + a * ex, my = p[1] + a * ey;
    if (std::abs(d - (r1 + r2)) <= tol || std::abs(d - std::abs(r1 - r2)) <= tol || h2 <= 0.0) {
      out.push_back(Point::euclidean(mx, my));
    } else {
      double h = std::sqrt(h2);
      out.push_back(Point::euclidean(mx - h * ey, my + h * ex));
      out.push_back(Point::euclidean(mx + h * ey, my - h * ex));
    }
  } else {
    out = ambient_intersect(c1, c2, d);
  }
  if (out.size() == 2 && orientation(c1.center(), c2.center(), out[0]) <
                             orientation(c1.center(), c2.center(), out[1]))
    std::swap(out[0], out[1]);
  return out;
}

std::vector<Circle> tangent_disks(const Point& p, double rho, const Point& q, double D) {
  require_same(p, q);
  const double d = distance(p, q);
  if (!(rho > 0.0 && rho < D && d > rho && d < 2.0 * D - rho))
    fail(ErrorCode::DomainError, "tangent_disks: outside the admissible window");
  std::vector<Point> zs = circle_intersect(Circle(p, D - rho), Circle(q, D));
  if (zs.size() != 2) fail(ErrorCode::DomainError, "tangent_disks: no transversal solution");
  return {Circle(zs[0], D), Circle(zs[1], D)};
}

Horoball::Horoball(const Vec3& w, double s) : ideal(w), level(s) {
  if (!(w[2] > 0.0) || std::abs(bilinear_form(w, w)) > 1e-9 * w[2] * w[2])
    fail(ErrorCode::DomainError, "ideal point must be a future null vector");
  if (!(s > 0.0)) fail(ErrorCode::DomainError, "horoball level must be positive");
  ideal = w / w[2];
}

bool Horoball::contains(const Point& z) const {
  return bilinear_form(z.ambient(), ideal) >= level;
}

Vec3 ideal_point(double phi) { return {std::cos(phi), std::sin(phi), 1.0}; }

double horoball_width(const Horoball& outer, const Horoball& inner) {
  if ((outer.ideal - inner.ideal).norm() > 1e-9)
    fail(ErrorCode::DifferentIdealPoints, "horoballs at different ideal points");
  if (inner.level < outer.level) fail(ErrorCode::NestedViolation, "inner horoball is larger");
  return std::log(inner.level / outer.level);
}

namespace {

void check_ideal(const Vec3& w) {
  if (!(w[2] > 0.0) || std::abs(bilinear_form(w, w)) > 1e-9 * w[2] * w[2])
    fail(ErrorCode::DomainError, "ideal point must be a future null vector");
}

}  // namespace

double horospherical_width(const std::vector<Point>& points, const Vec3& ideal) {
  if (points.empty()) fail(ErrorCode::EmptyBody, "no points");
  check_ideal(ideal);
  double lo = INFINITY, hi = -INFINITY;
  for (const Point& p : points) {
    if (p.geometry() != Geometry::hyperbolic)
      fail(ErrorCode::MismatchedGeometry, "horospherical width needs H2");
    double b = bilinear_form(p.ambient(), ideal);
    lo = std::min(lo, b);
    hi = std::max(hi, b);
  }
  return std::log(hi / lo);
}

double horospherical_width_segment(const Point& a, const Point& b, const Vec3& ideal) {
  check_ideal(ideal);
  if (a.geometry() != Geometry::hyperbolic || b.geometry() != Geometry::hyperbolic)
    fail(ErrorCode::MismatchedGeometry, "horospherical width needs H2");
  double L = distance(a, b);
  if (L == 0.0) return 0.0;
  // Along the geodesic, B(x(t), w) = P cosh t + Q sinh t.
  LogResult lr = log_map(a, b);
  double P = bilinear_form(a.ambient(), ideal);
  double Q = bilinear_form(lr.dir.dir, ideal);
  double lo = std::min(P, bilinear_form(b.ambient(), ideal));
  double hi = std::max(P, bilinear_form(b.ambient(), ideal));
  if (std::abs(Q) < P) {
    double t = std::atanh(-Q / P);
    if (t > 0.0 && t < L) lo = std::min(lo, P * std::cosh(t) + Q * std::sinh(t));
  }
  return std::log(hi / lo);
}

double horospherical_width(const DiskPolygon& body, const Vec3& ideal) {
  if (body.arcs().empty()) fail(ErrorCode::EmptyBody, "body has no boundary");
  if (body.geometry() != Geometry::hyperbolic)
    fail(ErrorCode::MismatchedGeometry, "horospherical width needs H2");
  check_ideal(ideal);
  // B(., w) has no critical point on H2, so extrema sit on the boundary.
  // On a circle it restricts to C + A cos(phi) + S sin(phi).
  double lo = INFINITY, hi = -INFINITY;
  for (const Arc& arc : body.arcs()) {
    const Circle& c = arc.circle();
    const double r = c.radius();
    Vec3 Jw(-ideal[0], -ideal[1], ideal[2]);
    Vec3 a = c.frame().to_world().transpose() * Jw;
    double A = a[0] * std::sinh(r), S = a[1] * std::sinh(r), C = a[2] * std::cosh(r);
    auto f = [&](double phi) { return C + A * std::cos(phi) + S * std::sin(phi); };
    double phis[4] = {arc.start_angle(), arc.start_angle() + arc.sweep(), std::atan2(S, A),
                      std::atan2(S, A) + pi};
    for (int k = 0; k < 4; ++k) {
      if (k >= 2 && arc.fraction_of_angle(phis[k]) < 0.0) continue;
      double v = f(phis[k]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return std::log(hi / lo);
}

}  // namespace cwidth

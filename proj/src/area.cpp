#include "cwidth/area.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace cwidth {

using std::numbers::pi;

namespace {

double triangle_area_raw(const Point& a, const Point& b, const Point& c) {
  switch (a.geometry()) {
    case Geometry::euclidean: {
      const Vec3 &p = a.ambient(), &q = b.ambient(), &r = c.ambient();
      return std::abs((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])) / 2.0;
    }
    case Geometry::spherical:
      return angle(b, a, c) + angle(a, b, c) + angle(a, c, b) - pi;
    case Geometry::hyperbolic:
      return pi - (angle(b, a, c) + angle(a, b, c) + angle(a, c, b));
  }
  return 0.0;
}

// Fan triangle area; zero when two corners coincide.
double fan_triangle(const Point& w, const Point& a, const Point& b) {
  if (distance(a, b) == 0.0 || distance(w, a) == 0.0 || distance(w, b) == 0.0) return 0.0;
  return triangle_area_raw(w, a, b);
}

}  // namespace

double triangle_area(const Point& a, const Point& b, const Point& c) {
  require_same(a, b);
  require_same(a, c);
  if (distance(a, b) == 0.0 || distance(b, c) == 0.0 || distance(a, c) == 0.0)
    fail(ErrorCode::DegenerateTriangle, "triangle has coincident corners");
  double A = triangle_area_raw(a, b, c);
  if (A < 1e-14) fail(ErrorCode::DegenerateTriangle, "triangle is degenerate");
  return A;
}

double sector_area(Geometry g, double r, double phi) {
  return disk_area(g, r) * phi / (2.0 * pi);
}

double circular_segment_area(const Point& a, const Point& b, const Circle& circle, bool ccw) {
  const double r = circle.radius();
  if (std::abs(distance(a, circle.center()) - r) > 1e-9 ||
      std::abs(distance(b, circle.center()) - r) > 1e-9)
    fail(ErrorCode::EndpointOffCircle, "segment endpoint is not on its circle");
  Arc arc = Arc::from_endpoints(circle, a, b, ccw);
  const double phi = arc.arc_angle();
  const double sector = sector_area(circle.geometry(), r, phi);
  if (phi >= 2.0 * pi - 1e-15) return sector;
  double tri = fan_triangle(circle.center(), a, b);
  return phi < pi ? sector - tri : sector + tri;
}

namespace {

AreaBreakdown fan_area(const DiskPolygon& body) {
  AreaBreakdown out;
  out.method = AreaMethod::fan;
  const auto& arcs = body.arcs();
  if (arcs.size() == 1) {
    const Circle& c = arcs[0].circle();
    double s = sector_area(body.geometry(), c.radius(), arcs[0].arc_angle());
    out.segment_parts.push_back({0, s});
    out.total = s;
    return out;
  }
  Point w = indisk(body).center;
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    out.triangle_part += fan_triangle(w, a.start(), a.end());
    double sector = sector_area(body.geometry(), a.circle().radius(), a.arc_angle());
    double tri = fan_triangle(a.circle().center(), a.start(), a.end());
    double seg = a.arc_angle() < pi ? sector - tri : sector + tri;
    out.segment_parts.push_back({static_cast<int>(i), seg});
  }
  out.total = out.triangle_part;
  for (auto& s : out.segment_parts) out.total += s.second;
  return out;
}

// Signed exterior angle at vertex v from the incoming arc to the outgoing arc.
double turning_angle(const Point& v, const Point& c_in, const Point& c_out) {
  const Geometry g = v.geometry();
  Isometry back = pose_isometry(g, v, 0.0).inverse();
  Vec3 a = back.apply_tangent(log_map(v, c_in).dir.dir);
  Vec3 b = back.apply_tangent(log_map(v, c_out).dir.dir);
  return std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
}

AreaBreakdown gauss_bonnet_area(const DiskPolygon& body) {
  const Geometry g = body.geometry();
  const auto& arcs = body.arcs();
  const size_t n = arcs.size();
  double turning = 0.0;
  if (n > 1) {
    for (size_t i = 0; i < n; ++i) {
      double e = turning_angle(arcs[i].start(), arcs[(i + n - 1) % n].circle().center(),
                               arcs[i].circle().center());
      if (std::abs(e) >= 1e-12) turning += e;
    }
  }
  // k_g * L per arc: phi cos r on S2, phi cosh r on H2.
  double curv = 0.0;
  for (const Arc& a : arcs) {
    double r = a.circle().radius();
    curv += a.arc_angle() * (g == Geometry::spherical ? std::cos(r) : std::cosh(r));
  }
  AreaBreakdown out;
  out.method = AreaMethod::gauss_bonnet;
  double rhs = 2.0 * pi - turning - curv;
  out.total = g == Geometry::spherical ? rhs : -rhs;
  return out;
}

}  // namespace

AreaBreakdown area(const DiskPolygon& body, AreaMethod method) {
  if (method == AreaMethod::gauss_bonnet) {
    if (body.geometry() != Geometry::euclidean) return gauss_bonnet_area(body);
    AreaBreakdown out = fan_area(body);
    out.fallback = true;
    return out;
  }
  if (method == AreaMethod::monte_carlo) {
    AreaBreakdown out;
    out.method = AreaMethod::monte_carlo;
    out.total = monte_carlo_area(body, 1000000, 1).area;
    return out;
  }
  return fan_area(body);
}

MonteCarloArea monte_carlo_area(const DiskPolygon& body, long n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::DomainError, "need at least one sample");
  const Geometry g = body.geometry();
  const Disk cd = circumdisk(body);
  const double R = cd.radius;
  const PolarFrame f(cd.center);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  // Radius with the exact area element: sin(rho/2) ~ sqrt(u) (and analogues).
  auto radius = [&](double u) {
    switch (g) {
      case Geometry::euclidean: return R * std::sqrt(u);
      case Geometry::spherical: return 2.0 * std::asin(std::sqrt(u) * std::sin(R / 2.0));
      case Geometry::hyperbolic: return 2.0 * std::asinh(std::sqrt(u) * std::sinh(R / 2.0));
    }
    return 0.0;
  };
  long hits = 0;
  for (long i = 0; i < n; ++i) {
    double u = u01(rng);
    double phi = 2.0 * pi * u01(rng);
    if (body.contains(f.at(radius(u), phi), 1e-12)) ++hits;
  }
  const double A = disk_area(g, R);
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {A * p, A * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

double perimeter(const DiskPolygon& body) { return body.perimeter(); }

}  // namespace cwidth

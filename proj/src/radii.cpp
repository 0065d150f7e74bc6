#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cwidth/body.hpp"
#include "cwidth/optimize.hpp"

namespace cwidth {

using std::numbers::pi;

namespace {

Disk disk_from_two(const Point& a, const Point& b) {
  return {midpoint(a, b), distance(a, b) / 2.0};
}

// Circle through three points; nullopt when none exists (collinear, or H2 hypercycle case).
std::optional<Disk> disk_from_three(const Point& a, const Point& b, const Point& c) {
  const Geometry g = a.geometry();
  const Vec3 &p = a.ambient(), &q = b.ambient(), &r = c.ambient();
  switch (g) {
    case Geometry::euclidean: {
      double bx = q[0] - p[0], by = q[1] - p[1], cx = r[0] - p[0], cy = r[1] - p[1];
      double d = 2.0 * (bx * cy - by * cx);
      if (std::abs(d) < 1e-300) return std::nullopt;
      double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
      double ux = (cy * b2 - by * c2) / d, uy = (bx * c2 - cx * b2) / d;
      Point o = Point::euclidean(p[0] + ux, p[1] + uy);
      return Disk{o, distance(o, a)};
    }
    case Geometry::spherical: {
      Vec3 n = (q - p).cross(r - p);
      double nn = n.norm();
      if (nn == 0.0) return std::nullopt;
      n /= nn;
      if (n.dot(p) < 0.0) n = -n;
      Point o = Point::from_ambient(g, n);
      return Disk{o, distance(o, a)};
    }
    case Geometry::hyperbolic: {
      Vec3 w = (q - p).cross(r - p);
      Vec3 n(-w[0], -w[1], w[2]);
      double b = bilinear_form(n, n);
      if (!(b > 0.0)) return std::nullopt;
      n /= std::sqrt(b);
      if (n[2] < 0.0) n = -n;
      Point o = Point::from_ambient(g, n);
      return Disk{o, distance(o, a)};
    }
  }
  return std::nullopt;
}

bool in_disk(const Disk& d, const Point& p) { return distance(d.center, p) <= d.radius * (1.0 + 1e-14) + 1e-15; }

Disk trivial_disk(const std::vector<Point>& R) {
  if (R.empty()) return {Point(), -1.0};
  if (R.size() == 1) return {R[0], 0.0};
  if (R.size() == 2) return disk_from_two(R[0], R[1]);
  if (auto d = disk_from_three(R[0], R[1], R[2])) return *d;
  Disk best = disk_from_two(R[0], R[1]);
  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 2}}) {
    Disk c = disk_from_two(R[i], R[j]);
    if (c.radius > best.radius) best = c;
  }
  return best;
}

}  // namespace

Disk min_enclosing_disk(std::vector<Point> pts) {
  if (pts.empty()) fail(ErrorCode::EmptyBody, "no points");
  // Welzl with move-to-front, iterative form; fixed shuffle keeps it deterministic.
  std::mt19937_64 rng(0x5eed);
  for (size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng() % i]);
  Disk d{pts[0], 0.0};
  for (size_t i = 1; i < pts.size(); ++i) {
    if (in_disk(d, pts[i])) continue;
    d = {pts[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (in_disk(d, pts[j])) continue;
      d = disk_from_two(pts[i], pts[j]);
      for (size_t k = 0; k < j; ++k) {
        if (in_disk(d, pts[k])) continue;
        d = trivial_disk({pts[i], pts[j], pts[k]});
      }
    }
  }
  return d;
}

namespace {

// Jung's certificate: the touching points must not fit in an open half-plane seen from p.
bool certify(const Disk& d, const std::vector<Point>& pts) {
  if (d.radius == 0.0) return true;
  PolarFrame f(d.center);
  std::vector<double> ang;
  for (const Point& p : pts)
    if (distance(d.center, p) >= d.radius - 1e-7) ang.push_back(wrap_angle(f.angle_of(p)));
  if (ang.size() < 2) return false;
  std::sort(ang.begin(), ang.end());
  double gap = ang.front() + 2.0 * pi - ang.back();
  for (size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
  return gap <= pi + 1e-7;
}

std::vector<Point> hull_points(const DiskPolygon& body) {
  std::vector<Point> pts = body.vertices();
  for (const Arc& a : body.arcs()) {
    if (body.kind() == DiskPolygon::Kind::intersection && a.circle().radius() >= body.width() &&
        a.arc_angle() < pi)
      continue;  // a disk of radius <= D holding both endpoints holds the whole arc
    for (int k = 0; k < 64; ++k) pts.push_back(a.at(k / 64.0));
  }
  return pts;
}

}  // namespace

Disk circumdisk(const DiskPolygon& body) {
  if (body.kind() == DiskPolygon::Kind::ball || body.arcs().size() == 1) {
    const Circle& c = body.arcs()[0].circle();
    return {c.center(), c.radius()};
  }
  std::vector<Point> pts = hull_points(body);
  Disk d = min_enclosing_disk(pts);
  if (body.kind() != DiskPolygon::Kind::intersection) {
    // Sampled arcs: polish against the exact farthest-point function.
    auto f = [&](const std::vector<double>& x) {
      PolarFrame fr(d.center);
      double r = std::hypot(x[0], x[1]);
      Point p = r == 0.0 ? d.center : fr.at(r, std::atan2(x[1], x[0]));
      return body.farthest_distance(p);
    };
    NelderMeadResult res = nelder_mead(f, {0.0, 0.0}, 1e-3 * std::max(d.radius, 1e-3), 1e-13, 2000);
    if (res.value < d.radius) {
      PolarFrame fr(d.center);
      double r = std::hypot(res.x[0], res.x[1]);
      Point p = r == 0.0 ? d.center : fr.at(r, std::atan2(res.x[1], res.x[0]));
      d = {p, res.value};
    } else {
      d.radius = body.farthest_distance(d.center);
    }
    // Touching points are often corners, so the vertices go in exactly.
    pts = body.vertices();
    for (const Point& p : body.sample_boundary(2048)) pts.push_back(p);
    if (!certify({d.center, d.radius - 1e-6}, pts))
      fail(ErrorCode::CertificationFailure, "circumdisk certificate failed");
    return d;
  }
  if (!certify(d, pts)) fail(ErrorCode::CertificationFailure, "circumdisk certificate failed");
  return d;
}

Disk indisk(const DiskPolygon& body) {
  if (body.kind() == DiskPolygon::Kind::ball) {
    const Circle& c = body.arcs()[0].circle();
    return {c.center(), c.radius()};
  }
  if (body.kind() == DiskPolygon::Kind::intersection) {
    Disk c = min_enclosing_disk(body.active_centers());
    return {c.center, body.width() - c.radius};
  }
  // Mixed radii: maximize the distance to the boundary directly.
  Point p0 = body.interior_point();
  PolarFrame fr(p0);
  auto to_point = [&](const std::vector<double>& x) {
    double r = std::hypot(x[0], x[1]);
    return r == 0.0 ? p0 : fr.at(r, std::atan2(x[1], x[0]));
  };
  auto depth = [&](const Point& p) {
    if (!body.contains(p)) return -body.distance_to(p);
    double best = INFINITY;
    for (const Arc& a : body.arcs()) {
      const Circle& c = a.circle();
      double dc = distance(p, c.center());
      double d = dc == 0.0 || a.fraction_of_angle(c.angle_of(p)) >= 0.0
                     ? c.radius() - dc
                     : std::min(distance(p, a.start()), distance(p, a.end()));
      best = std::min(best, d);
    }
    return best;
  };
  NelderMeadResult res = nelder_mead([&](const std::vector<double>& x) { return -depth(to_point(x)); },
                                     {0.0, 0.0}, 0.05 * body.width(), 1e-13, 4000);
  return {to_point(res.x), -res.value};
}

RadiiReport radii(const DiskPolygon& body) {
  Disk in = indisk(body);
  Disk out = circumdisk(body);
  return {in.radius, in.center, out.radius, out.center};
}

}  // namespace cwidth

#include "cwidth/constructions.hpp"

#include "cwidth/area.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace cwidth {

using std::numbers::pi;

namespace {

void check_width(double D, Geometry g) {
  if (!(D > 0.0)) fail(ErrorCode::DomainError, "width must be positive");
  if (g == Geometry::spherical && D >= pi / 2)
    fail(ErrorCode::DomainError, "spherical width must be < pi/2");
}

}  // namespace

RegularTriangle regular_triangle(double D, Geometry g, const Point& center, double rotation) {
  check_width(D, g);
  if (center.geometry() != g) fail(ErrorCode::MismatchedGeometry, "pose center geometry mismatch");
  const double R = regular_triangle_circumradius(D, g);
  PolarFrame f(center);
  return {{f.at(R, rotation), f.at(R, rotation + 2.0 * pi / 3.0), f.at(R, rotation + 4.0 * pi / 3.0)},
          center};
}

DiskPolygon reuleaux_triangle(const ReuleauxTrianglePose& pose) {
  RegularTriangle tri = regular_triangle(pose.D, pose.g, pose.center, pose.rotation);
  return DiskPolygon::build({tri.v[0], tri.v[1], tri.v[2]}, pose.D);
}

DiskPolygon reuleaux_triangle(double D, Geometry g) {
  return reuleaux_triangle({D, g, Point::reference(g), 0.0});
}

double reuleaux_inradius(double D, Geometry g) { return D - regular_triangle_circumradius(D, g); }

namespace {

void check_rho(double D, double rho, Geometry g) {
  check_width(D, g);
  const double r = reuleaux_inradius(D, g);
  if (rho < r - 1e-12 || rho > D / 2.0 + 1e-12)
    fail(ErrorCode::DomainError, "rho must lie in [r(U_D), D/2]");
}

}  // namespace

TildeFrame tilde_frame(double D, double rho, Geometry g) {
  check_rho(D, rho, g);
  TildeFrame fr;
  fr.D = D;
  fr.rho = rho;
  fr.g = g;
  fr.p = Point::reference(g);
  PolarFrame f(fr.p);
  const double R = regular_triangle_circumradius(D, g);
  for (int i = 0; i < 3; ++i) {
    double th = 2.0 * pi * i / 3.0;
    fr.v[i] = f.at(R, th);
    fr.q[i] = f.at(D - rho, th);
    fr.t[i] = f.at(rho, th + pi);
  }
  const double r = reuleaux_inradius(D, g);
  if (rho <= r + 1e-12 || rho >= D / 2.0 - 1e-12) return fr;
  for (int i = 0; i < 3; ++i) {
    std::vector<Circle> cs = tangent_disks(fr.p, rho, fr.q[i], D);
    for (const Circle& c : cs) {
      Point w = exp_map(fr.p, -log_map(fr.p, c.center()).dir.dir, rho);
      // w~_ij lies on q~_j's side of the line q~_i t~_i.
      int j = (i + 1) % 3, k = (i + 2) % 3;
      double side = orientation(fr.q[i], fr.t[i], w);
      int target = (side > 0) == (orientation(fr.q[i], fr.t[i], fr.q[j]) > 0) ? j : k;
      fr.z[i][target] = c.center();
      fr.w[i][target] = w;
    }
  }
  return fr;
}

DiskPolygon w_tilde(double D, double rho, Geometry g) {
  TildeFrame fr = tilde_frame(D, rho, g);
  std::vector<Point> centers;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> cand = circle_intersect(Circle(fr.q[i], D), Circle(fr.t[j], D));
      const double ref = orientation(fr.q[i], fr.t[j], fr.p);
      const Point* pick = &cand.front();
      for (const Point& c : cand)
        if ((orientation(fr.q[i], fr.t[j], c) > 0) == (ref > 0)) pick = &c;
      centers.push_back(*pick);
    }
  }
  return DiskPolygon::build(centers, D);
}

DiskPolygon q_tilde(double D, double rho, Geometry g) {
  check_rho(D, rho, g);
  const double r = reuleaux_inradius(D, g);
  if (rho <= r + 1e-12) return reuleaux_triangle(D, g);
  // Continuous limit at rho = D/2: the tangent circles collapse onto t~_i and Q~ becomes the ball.
  if (rho >= D / 2.0 - 1e-12) return DiskPolygon::ball(Point::reference(g), D / 2.0);
  TildeFrame fr = tilde_frame(D, rho, g);
  const Circle inner(fr.p, rho);
  std::vector<Arc> arcs;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    arcs.push_back(Arc::from_endpoints(Circle(*fr.z[i][j], D), fr.q[i], *fr.w[i][j], true));
    arcs.push_back(Arc::from_endpoints(inner, *fr.w[i][j], *fr.w[j][i], true));
    arcs.push_back(Arc::from_endpoints(Circle(*fr.z[j][i], D), *fr.w[j][i], fr.q[j], true));
  }
  return DiskPolygon::from_arcs(g, D, std::move(arcs));
}

double gamma_tilde_area(double D, double rho, Geometry g) {
  TildeFrame fr = tilde_frame(D, rho, g);
  if (!fr.z[0][1]) return 0.0;
  const Point& q1 = fr.q[0];
  const Point& w12 = *fr.w[0][1];
  const Point& w13 = *fr.w[0][2];
  // Fan from p~ over w13 -> q1 -> w12, plus the two outward segments,
  // minus the sector of B(p~, rho) between w13 and w12.
  double fan = triangle_area(fr.p, w13, q1) + triangle_area(fr.p, q1, w12);
  double seg = circular_segment_area(w13, q1, Circle(*fr.z[0][2], D), true) +
               circular_segment_area(q1, w12, Circle(*fr.z[0][1], D), true);
  double sector = sector_area(g, rho, angle(w13, fr.p, w12));
  return fan + seg - sector;
}

double pentagon_eta_max(double D, Geometry g) {
  check_width(D, g);
  auto ok = [&](double eta) {
    try {
      pentagon_points(D, eta, g);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  double lo = 0.0, hi = D / 4.0;
  while (ok(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 4.0 * D) break;
  }
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

PentagonPoints pentagon_points(double D, double eta, Geometry g) {
  check_width(D, g);
  if (eta < 0.0) fail(ErrorCode::DomainError, "eta must be non-negative");
  RegularTriangle tri = regular_triangle(D, g, Point::reference(g), 0.0);
  PentagonPoints pp{tri.v, tri.center, tri.center, tri.center, tri.v[2], tri.v[2]};
  const Point& v3 = tri.v[2];
  LogResult down = log_map(v3, tri.center);
  pp.u3 = exp_map(down.dir, D);
  if (eta == 0.0) {
    pp.u3_eta = pp.u3;
    return pp;
  }
  if (g == Geometry::spherical && D + eta >= pi)
    fail(ErrorCode::EtaTooLarge, "eta too large on S2");
  pp.u3_eta = exp_map(down.dir, D + eta);
  // v3i: dB(u3_eta, D) meets the shorter arc v3 -> v_i of dB(v_{3-i}, D).
  for (int i = 0; i < 2; ++i) {
    const Point& vi = tri.v[i];
    const Circle c(tri.v[1 - i], D);
    Arc arc = Arc::from_endpoints(c, v3, vi, true);
    if (arc.arc_angle() > pi) arc = Arc::from_endpoints(c, v3, vi, false);
    std::optional<Point> hit;
    for (const Point& x : circle_intersect(Circle(pp.u3_eta, D), c)) {
      double phi = c.angle_of(x);
      double off = arc.ccw() ? wrap_angle(phi - arc.start_angle()) : wrap_angle(arc.start_angle() - phi);
      if (off > 0.0 && off < arc.arc_angle()) hit = x;
    }
    if (!hit) fail(ErrorCode::EtaTooLarge, "eta beyond the range where v3i exists");
    (i == 0 ? pp.v31 : pp.v32) = *hit;
  }
  return pp;
}

DiskPolygon pentagon(double D, double eta, Geometry g) {
  if (eta == 0.0) return reuleaux_triangle(D, g);
  PentagonPoints pp = pentagon_points(D, eta, g);
  return DiskPolygon::build({pp.v[0], pp.v[1], pp.u3_eta, pp.v31, pp.v32}, D);
}

std::vector<Point> random_seed_points(double D, Geometry g, int n_seeds, std::uint64_t seed) {
  if (n_seeds < 1) fail(ErrorCode::DomainError, "need at least one seed point");
  check_width(D, g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double R = D / 2.0;
  PolarFrame f(Point::reference(g));
  std::vector<Point> pts;
  for (int k = 0; k < n_seeds; ++k) {
    double u = u01(rng);
    double phi = 2.0 * pi * u01(rng);
    double rho = 0.0;
    switch (g) {
      case Geometry::euclidean: rho = R * std::sqrt(u); break;
      case Geometry::spherical: rho = 2.0 * std::asin(std::sqrt(u) * std::sin(R / 2.0)); break;
      case Geometry::hyperbolic: rho = 2.0 * std::asinh(std::sqrt(u) * std::sinh(R / 2.0)); break;
    }
    pts.push_back(f.at(rho, phi));
  }
  // Points of B(z0, D/2) already have diameter <= D; shrink only against round-off.
  double d = point_set_diameter(pts);
  if (d > D) {
    for (Point& p : pts) {
      if (distance(p, f.center()) == 0.0) continue;
      LogResult l = log_map(f.center(), p);
      p = exp_map(l.dir, l.length * D / d);
    }
  }
  return pts;
}

DiskPolygon random_constant_width(double D, Geometry g, int n_seeds, std::uint64_t seed,
                                  bool inject_triangle) {
  std::vector<Point> pts = random_seed_points(D, g, n_seeds, seed);
  if (inject_triangle) {
    RegularTriangle tri = regular_triangle(D, g, Point::reference(g), 0.0);
    pts.assign(tri.v.begin(), tri.v.end());
  }
  return complete(pts, D);
}

}  // namespace cwidth

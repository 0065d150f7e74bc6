#include "cwidth/body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace cwidth {

using std::numbers::pi;

namespace {

// Arcs shorter than this (radians) are treated as stitching noise.
constexpr double kMinArc = 1e-9;

Point mean_point(Geometry g, const std::vector<Point>& pts) {
  Vec3 m = Vec3::Zero();
  for (const Point& p : pts) m += p.ambient();
  m /= static_cast<double>(pts.size());
  switch (g) {
    case Geometry::euclidean: return Point::euclidean(m[0], m[1]);
    case Geometry::spherical: return Point::from_ambient(g, m / m.norm());
    case Geometry::hyperbolic: return Point::from_ambient(g, m / std::sqrt(bilinear_form(m, m)));
  }
  return pts.front();
}

// Half-width of the angular window of dB(c_j, D) inside B(c_k, D), centers at distance d.
double lens_half_angle(Geometry g, double d, double D) {
  switch (g) {
    case Geometry::euclidean: return clamped_acos(d / (2.0 * D));
    case Geometry::spherical: return clamped_acos(std::tan(d / 2.0) / std::tan(D));
    case Geometry::hyperbolic: return clamped_acos(std::tanh(d / 2.0) / std::tanh(D));
  }
  return 0.0;
}

struct Window {
  double start;
  double len;
};

// Intersection of two circular windows, each shorter than pi.
std::optional<Window> intersect(const Window& a, const Window& b) {
  double o = wrap_angle(b.start - a.start);
  if (o <= a.len) return Window{b.start, std::min(a.len - o, b.len)};
  double o2 = wrap_angle(a.start - b.start);
  if (o2 <= b.len) return Window{a.start, std::min(a.len, b.len - o2)};
  return std::nullopt;
}

double point_to_arc(const Arc& arc, const Point& x) {
  const Circle& c = arc.circle();
  double dc = distance(x, c.center());
  if (dc == 0.0) return c.radius();
  if (arc.fraction_of_angle(c.angle_of(x)) >= 0.0) return std::abs(dc - c.radius());
  return std::min(distance(x, arc.start()), distance(x, arc.end()));
}

}  // namespace

DiskPolygon DiskPolygon::build(const std::vector<Point>& centers, double D) {
  if (centers.empty()) fail(ErrorCode::EmptyBody, "no centers");
  const Geometry g = centers.front().geometry();
  for (const Point& c : centers) require_same(c, centers.front());
  if (!(D > 0.0)) fail(ErrorCode::DomainError, "width must be positive");
  if (g == Geometry::spherical && D >= pi / 2)
    fail(ErrorCode::DomainError, "spherical width must be < pi/2");

  DiskPolygon body;
  body.kind_ = Kind::intersection;
  body.g_ = g;
  body.width_ = D;
  body.centers_ = centers;
  body.active_.assign(centers.size(), false);

  std::vector<size_t> uniq;
  for (size_t i = 0; i < centers.size(); ++i) {
    bool dup = false;
    for (size_t j : uniq)
      if (distance(centers[i], centers[j]) < 1e-14) dup = true;
    if (!dup) uniq.push_back(i);
  }
  for (size_t a = 0; a < uniq.size(); ++a)
    for (size_t b = a + 1; b < uniq.size(); ++b)
      if (distance(centers[uniq[a]], centers[uniq[b]]) > 2.0 * D + 1e-12)
        fail(ErrorCode::EmptyIntersection, "two disks are disjoint");

  if (uniq.size() == 1) {
    body.active_[uniq[0]] = true;
    body.arcs_.emplace_back(Circle(centers[uniq[0]], D), 0.0, 2.0 * pi);
    body.finish();
    return body;
  }

  std::vector<std::pair<size_t, Arc>> found;
  for (size_t j : uniq) {
    Circle circ(centers[j], D);
    std::optional<Window> win;
    bool first = true;
    for (size_t k : uniq) {
      if (k == j) continue;
      double d = distance(centers[j], centers[k]);
      double phi = circ.angle_of(centers[k]);
      double alpha = lens_half_angle(g, d, D);
      Window w{wrap_angle(phi - alpha), 2.0 * alpha};
      win = first ? std::optional<Window>(w) : intersect(*win, w);
      first = false;
      if (!win) break;
    }
    if (win && win->len > kMinArc) found.emplace_back(j, Arc(circ, win->start, win->len));
  }
  if (found.empty()) fail(ErrorCode::EmptyIntersection, "disks have no common point");
  if (found.size() < 2) fail(ErrorCode::DegenerateIntersection, "intersection has empty interior");

  std::vector<Point> mids;
  for (auto& f : found) mids.push_back(f.second.at(0.5));
  PolarFrame hub(mean_point(g, mids));
  std::vector<double> key;
  for (auto& f : found) key.push_back(wrap_angle(hub.angle_of(f.second.start())));
  std::vector<size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return found[a].first < found[b].first;
  });
  for (size_t i : order) {
    body.active_[found[i].first] = true;
    body.arcs_.push_back(found[i].second);
  }
  const size_t n = body.arcs_.size();
  for (size_t i = 0; i < n; ++i) {
    double gap = distance(body.arcs_[i].end(), body.arcs_[(i + 1) % n].start());
    if (gap > 1e-7 * std::max(1.0, D))
      fail(ErrorCode::DegenerateIntersection, "boundary arcs do not close up");
  }
  body.finish();
  return body;
}

DiskPolygon DiskPolygon::ball(const Point& center, double radius) {
  DiskPolygon body;
  body.kind_ = Kind::ball;
  body.g_ = center.geometry();
  body.width_ = 2.0 * radius;
  body.centers_ = {center};
  body.active_ = {true};
  body.arcs_.emplace_back(Circle(center, radius), 0.0, 2.0 * pi);
  body.finish();
  return body;
}

DiskPolygon DiskPolygon::from_arcs(Geometry g, double width, std::vector<Arc> arcs) {
  if (arcs.empty()) fail(ErrorCode::EmptyBody, "empty arc chain");
  DiskPolygon body;
  body.kind_ = Kind::arc_chain;
  body.g_ = g;
  body.width_ = width;
  const size_t n = arcs.size();
  for (size_t i = 0; i < n; ++i) {
    if (arcs[i].circle().geometry() != g)
      fail(ErrorCode::MismatchedGeometry, "arc geometry differs from body geometry");
    if (!arcs[i].ccw()) fail(ErrorCode::DomainError, "arc chain must be convex (ccw arcs)");
    if (distance(arcs[i].end(), arcs[(i + 1) % n].start()) > 1e-7 * std::max(1.0, width))
      fail(ErrorCode::DegenerateIntersection, "arc chain does not close up");
    body.centers_.push_back(arcs[i].circle().center());
  }
  body.active_.assign(n, true);
  body.arcs_ = std::move(arcs);
  body.finish();
  return body;
}

void DiskPolygon::finish() {
  cum_length_.assign(1, 0.0);
  for (const Arc& a : arcs_) cum_length_.push_back(cum_length_.back() + arc_length(a));
}

std::vector<Point> DiskPolygon::active_centers() const {
  std::vector<Point> out;
  for (size_t i = 0; i < centers_.size(); ++i)
    if (active_[i]) out.push_back(centers_[i]);
  return out;
}

std::vector<Point> DiskPolygon::vertices() const {
  std::vector<Point> out;
  if (arcs_.size() < 2) return out;
  for (const Arc& a : arcs_) out.push_back(a.start());
  return out;
}

double DiskPolygon::perimeter() const { return cum_length_.back(); }

bool DiskPolygon::contains(const Point& x, double tol) const {
  require_same(x, centers_.front());
  if (kind_ != Kind::arc_chain) {
    const double r = kind_ == Kind::ball ? arcs_[0].circle().radius() : width_;
    for (size_t i = 0; i < centers_.size(); ++i)
      if (active_[i] && distance(x, centers_[i]) > r + tol) return false;
    return true;
  }
  // Convex chain: the vertex polygon plus one circular segment per arc.
  const std::vector<Point> v = vertices();
  const size_t n = v.size();
  bool in_poly = true;
  std::vector<bool> outside_edge(n, false);
  for (size_t i = 0; i < n; ++i) {
    if (orientation(v[i], v[(i + 1) % n], x) < 0.0) {
      in_poly = false;
      outside_edge[i] = true;
    }
  }
  if (in_poly) return true;
  for (size_t i = 0; i < n; ++i) {
    if (!outside_edge[i]) continue;
    const Circle& c = arcs_[i].circle();
    if (distance(x, c.center()) <= c.radius() + tol) return true;
  }
  return false;
}

double DiskPolygon::distance_to(const Point& x) const {
  if (contains(x, 0.0)) return 0.0;
  double best = INFINITY;
  for (const Arc& a : arcs_) best = std::min(best, point_to_arc(a, x));
  return best;
}

double DiskPolygon::farthest_distance(const Point& x) const {
  double best = 0.0;
  for (const Arc& a : arcs_) {
    const Circle& c = a.circle();
    best = std::max({best, distance(x, a.start()), distance(x, a.end())});
    if (a.fraction_of_angle(c.angle_of(x) + pi) >= 0.0)
      best = std::max(best, distance(x, c.center()) + c.radius());
  }
  return best;
}

Point DiskPolygon::interior_point() const {
  if (arcs_.size() == 1) return arcs_[0].circle().center();
  std::vector<Point> mids;
  for (const Arc& a : arcs_) mids.push_back(a.at(0.5));
  return mean_point(g_, mids);
}

Point DiskPolygon::boundary_point(double s) const {
  const double P = perimeter();
  s = std::fmod(s, P);
  if (s < 0.0) s += P;
  size_t i = std::upper_bound(cum_length_.begin(), cum_length_.end(), s) - cum_length_.begin();
  i = std::clamp<size_t>(i, 1, arcs_.size()) - 1;
  double len = cum_length_[i + 1] - cum_length_[i];
  return arcs_[i].at(std::clamp((s - cum_length_[i]) / len, 0.0, 1.0));
}

std::vector<double> DiskPolygon::boundary_parameters(int n) const {
  std::vector<double> s(n);
  for (int k = 0; k < n; ++k) s[k] = perimeter() * k / n;
  return s;
}

std::vector<Point> DiskPolygon::sample_boundary(int n) const {
  std::vector<Point> out;
  out.reserve(n);
  for (double s : boundary_parameters(n)) out.push_back(boundary_point(s));
  return out;
}

double point_set_diameter(const std::vector<Point>& pts) {
  double d = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, distance(pts[i], pts[j]));
  return d;
}

DiameterResult diameter(const DiskPolygon& body) {
  const auto& arcs = body.arcs();
  DiameterResult best{0.0, arcs[0].start(), arcs[0].start()};
  auto offer = [&](double v, const Point& a, const Point& b) {
    if (v > best.value) best = {v, a, b};
  };
  const std::vector<Point> verts = body.vertices();
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      offer(distance(verts[i], verts[j]), verts[i], verts[j]);
  // Vertex against arc interior: the far point of the circle, opposite x through c.
  for (const Point& v : verts) {
    for (const Arc& a : arcs) {
      const Circle& c = a.circle();
      double phi = c.angle_of(v) + pi;
      if (a.fraction_of_angle(phi) >= 0.0) offer(distance(v, c.center()) + c.radius(), v, c.at(phi));
    }
  }
  // Interior against interior: both far points lie on the line through the centers.
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i; j < arcs.size(); ++j) {
      const Circle& ci = arcs[i].circle();
      const Circle& cj = arcs[j].circle();
      double dc = distance(ci.center(), cj.center());
      if (dc < 1e-14) {
        const Arc* pairs[2][2] = {{&arcs[i], &arcs[j]}, {&arcs[j], &arcs[i]}};
        for (auto& pr : pairs) {
          double phi = pr[0]->start_angle() + pi;
          if (pr[1]->fraction_of_angle(phi) >= 0.0)
            offer(ci.radius() + cj.radius(), pr[0]->start(), pr[1]->circle().at(phi));
        }
        continue;
      }
      double phi_i = ci.angle_of(cj.center()) + pi;
      double phi_j = cj.angle_of(ci.center()) + pi;
      if (arcs[i].fraction_of_angle(phi_i) >= 0.0 && arcs[j].fraction_of_angle(phi_j) >= 0.0)
        offer(dc + ci.radius() + cj.radius(), ci.at(phi_i), cj.at(phi_j));
    }
  }
  return best;
}

DiskPolygon t_operator(const std::vector<Point>& points, double D) {
  if (points.empty()) fail(ErrorCode::EmptyBody, "no points");
  double d = point_set_diameter(points);
  if (d > D + 1e-9) fail(ErrorCode::DiameterExceeded, "point set diameter exceeds the width");
  return DiskPolygon::build(points, D);
}

namespace {

// Golden-section maximization of f on [a, b].
template <class F>
double golden_max(F&& f, double a, double b, int iters = 80) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int k = 0; k < iters && b - a > 1e-15; ++k) {
    if (fc >= fd) {
      b = d; d = c; fd = fc;
      c = b - r * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + r * (b - a); fd = f(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

double hausdorff_one_sided(const DiskPolygon& from, const DiskPolygon& to, int samples) {
  require_same(from.centers().front(), to.centers().front());
  const int n = std::max(samples, 16);
  const std::vector<double> s = from.boundary_parameters(n);
  std::vector<double> val(n);
  for (int k = 0; k < n; ++k) val[k] = to.distance_to(from.boundary_point(s[k]));
  // Include the vertices exactly; corners are where the gap usually peaks.
  double best = *std::max_element(val.begin(), val.end());
  for (const Point& v : from.vertices()) best = std::max(best, to.distance_to(v));
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const int top = std::min(8, n);
  std::partial_sort(idx.begin(), idx.begin() + top, idx.end(),
                    [&](int a, int b) { return val[a] > val[b] || (val[a] == val[b] && a < b); });
  const double h = from.perimeter() / n;
  for (int t = 0; t < top; ++t) {
    if (val[idx[t]] <= 0.0) break;
    double s0 = s[idx[t]];
    best = std::max(best, golden_max([&](double u) { return to.distance_to(from.boundary_point(u)); },
                                     s0 - h, s0 + h));
  }
  return best;
}

double hausdorff(const DiskPolygon& a, const DiskPolygon& b, int samples) {
  return std::max(hausdorff_one_sided(a, b, samples), hausdorff_one_sided(b, a, samples));
}

namespace {

constexpr int kCompletenessSamples = 256;

std::vector<Point> completeness_samples(const DiskPolygon& body) {
  std::vector<Point> pts = body.vertices();
  for (const Point& p : body.sample_boundary(kCompletenessSamples)) pts.push_back(p);
  return pts;
}

double dekster_margin(const DiskPolygon& body) {
  const Geometry g = body.geometry();
  const double D = body.width();
  double worst = 0.0;
  auto probe = [&](const Point& p, const Vec3& inward) {
    Point q = exp_map(p, inward / tangent_norm(g, inward), D);
    worst = std::max(worst, body.distance_to(q));
  };
  const auto& arcs = body.arcs();
  const size_t n = arcs.size();
  for (size_t i = 0; i < n; ++i) {
    const Arc& a = arcs[i];
    for (int k = 1; k < kCompletenessSamples / static_cast<int>(n) + 1; ++k) {
      Point p = a.at(static_cast<double>(k) / (kCompletenessSamples / static_cast<int>(n) + 1));
      probe(p, log_map(p, a.circle().center()).dir.dir);
    }
    if (n < 2) continue;
    // Vertex between arc i-1 and arc i: sweep the normal cone.
    const Point& v = a.start();
    Vec3 n_in = log_map(v, arcs[(i + n - 1) % n].circle().center()).dir.dir;
    Vec3 n_out = log_map(v, a.circle().center()).dir.dir;
    PolarFrame f(v);
    Isometry back = pose_isometry(g, v, 0.0).inverse();
    Vec3 ui = back.apply_tangent(n_in), uo = back.apply_tangent(n_out);
    double ai = std::atan2(ui[1], ui[0]);
    double ao = std::atan2(uo[1], uo[0]);
    double sweep = std::remainder(ao - ai, 2.0 * pi);
    for (int k = 0; k <= 4; ++k) probe(v, f.direction(ai + sweep * k / 4.0));
  }
  return worst;
}

}  // namespace

CompletenessResult is_complete(const DiskPolygon& body, CompletenessMode mode, double tol) {
  const double D = body.width();
  switch (mode) {
    case CompletenessMode::fixpoint: {
      if (body.kind() == DiskPolygon::Kind::ball) {
        // The intersection of all B(x, D), x in B(c, r), is exactly B(c, D - r).
        double m = std::abs(D - 2.0 * body.arcs()[0].circle().radius());
        return {m <= tol, m};
      }
      std::vector<Point> pts = completeness_samples(body);
      double dp = point_set_diameter(pts);
      if (dp > D + 1e-9) return {false, dp - D};
      try {
        double m = hausdorff(body, DiskPolygon::build(pts, D));
        return {m <= tol, m};
      } catch (const Error&) {
        return {false, INFINITY};
      }
    }
    case CompletenessMode::farthest: {
      double m = 0.0;
      for (const Point& z : completeness_samples(body))
        m = std::max(m, std::abs(body.farthest_distance(z) - D));
      return {m <= tol, m};
    }
    case CompletenessMode::dekster: {
      double m = std::max(0.0, diameter(body).value - D);
      m = std::max(m, dekster_margin(body));
      return {m <= tol, m};
    }
  }
  return {false, INFINITY};
}

DiskPolygon complete(const std::vector<Point>& points, double D, CompletionStats* stats) {
  if (points.empty()) fail(ErrorCode::EmptyBody, "no points");
  for (const Point& p : points) require_same(p, points.front());
  if (point_set_diameter(points) > D + 1e-9)
    fail(ErrorCode::DiameterExceeded, "point set diameter exceeds the width");
  if (point_set_diameter(points) < 1e-12) {
    DiskPolygon b = DiskPolygon::ball(points.front(), D / 2.0);
    if (stats) *stats = {0, 0.0};
    return b;
  }
  std::vector<Point> S = points;
  const int max_rounds = 200;
  for (int round = 0; round < max_rounds; ++round) {
    DiskPolygon K = DiskPolygon::build(S, D);
    DiameterResult dr = diameter(K);
    double excess = dr.value - D;
    if (excess <= 1e-10) {
      if (stats) *stats = {round, std::max(excess, 0.0)};
      return K;
    }
    // Insert the boundary point that sees farthest into K.
    Point pick = dr.a;
    double far = K.farthest_distance(dr.a);
    for (const Point& v : K.vertices()) {
      double f = K.farthest_distance(v);
      if (f > far + 1e-15) {
        far = f;
        pick = v;
      }
    }
    S.push_back(pick);
  }
  DiskPolygon K = DiskPolygon::build(S, D);
  double excess = diameter(K).value - D;
  fail(ErrorCode::NonConvergence,
       "completion did not converge, final diameter excess " + std::to_string(excess));
}

}  // namespace cwidth

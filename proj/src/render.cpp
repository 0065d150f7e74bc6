#include "cwidth/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace cwidth {

using std::numbers::pi;

std::string_view to_string(Projection p) {
  switch (p) {
    case Projection::plane: return "plane";
    case Projection::poincare: return "poincare";
    case Projection::stereographic: return "stereographic";
  }
  return "plane";
}

Projection projection_from_string(std::string_view s) {
  if (s == "plane") return Projection::plane;
  if (s == "poincare") return Projection::poincare;
  if (s == "stereographic") return Projection::stereographic;
  fail(ErrorCode::DomainError, "unknown projection '" + std::string(s) + "'");
}

Projection default_projection(Geometry g) {
  switch (g) {
    case Geometry::euclidean: return Projection::plane;
    case Geometry::spherical: return Projection::stereographic;
    case Geometry::hyperbolic: return Projection::poincare;
  }
  return Projection::plane;
}

namespace {

using P2 = std::array<double, 2>;

const char* kPalette[] = {"#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e"};

P2 project(const Point& x, Projection proj) {
  switch (proj) {
    case Projection::plane: return {x[0], x[1]};
    case Projection::poincare: return to_poincare(x);
    case Projection::stereographic: return to_stereographic(x);
  }
  return {0.0, 0.0};
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  // Avoid "-0.0000" so equal geometry always prints equal text.
  if (std::string(buf) == "-0.0000") return "0.0000";
  return buf;
}

class Canvas {
 public:
  Canvas(const RenderSpec& spec, double xmin, double xmax, double ymin, double ymax) : spec_(spec) {
    double span = std::max(xmax - xmin, ymax - ymin);
    scale_ = spec.size_px * 0.9 / span;
    cx_ = (xmin + xmax) / 2.0;
    cy_ = (ymin + ymax) / 2.0;
  }

  P2 screen(const P2& p) const {
    return {spec_.size_px / 2.0 + (p[0] - cx_) * scale_, spec_.size_px / 2.0 - (p[1] - cy_) * scale_};
  }
  P2 screen(const Point& x) const { return screen(project(x, spec_.projection)); }
  double scale() const { return scale_; }

 private:
  const RenderSpec& spec_;
  double scale_, cx_, cy_;
};

// SVG arc command from the current point s through m to e (all in screen coordinates).
std::string arc_command(const P2& s, const P2& m, const P2& e) {
  const double ax = m[0] - s[0], ay = m[1] - s[1], bx = e[0] - s[0], by = e[1] - s[1];
  const double det = 2.0 * (ax * by - ay * bx);
  const double chord = std::hypot(bx, by);
  if (std::abs(det) < 1e-9 * std::max(1.0, chord * chord))
    return "L " + num(e[0]) + " " + num(e[1]) + " ";
  const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by;
  const double ux = (by * a2 - ay * b2) / det, uy = (ax * b2 - bx * a2) / det;
  const double radius = std::hypot(ux, uy);
  // Positive-angle direction in screen coordinates is a left turn s -> m -> e.
  const double turn = (m[0] - s[0]) * (e[1] - m[1]) - (m[1] - s[1]) * (e[0] - m[0]);
  const int sweep = turn > 0 ? 1 : 0;
  // Major arc iff the center lies on the same side of the chord as m.
  const double side_m = bx * (m[1] - s[1]) - by * (m[0] - s[0]);
  const double side_c = bx * uy - by * ux;
  const int large = side_m * side_c > 0 ? 1 : 0;
  return "A " + num(radius) + " " + num(radius) + " 0 " + std::to_string(large) + " " +
         std::to_string(sweep) + " " + num(e[0]) + " " + num(e[1]) + " ";
}

// One command per arc; arcs of angle >= pi (full circles included) are drawn as two halves.
std::string arc_path(const Canvas& cv, const Arc& a, bool move) {
  std::string d;
  if (move) {
    P2 s = cv.screen(a.start());
    d += "M " + num(s[0]) + " " + num(s[1]) + " ";
  }
  if (a.arc_angle() < pi) return d + arc_command(cv.screen(a.start()), cv.screen(a.at(0.5)), cv.screen(a.end()));
  d += arc_command(cv.screen(a.start()), cv.screen(a.at(0.25)), cv.screen(a.at(0.5)));
  d += arc_command(cv.screen(a.at(0.5)), cv.screen(a.at(0.75)), cv.screen(a.end()));
  return d;
}

std::string circle_path(const Canvas& cv, const Circle& c) {
  return arc_path(cv, Arc(c, 0.0, 2.0 * pi), true) + "Z";
}

bool compatible(Projection p, Geometry g) { return default_projection(g) == p; }

}  // namespace

std::string render_svg(const std::vector<DiskPolygon>& bodies, const RenderSpec& spec) {
  if (bodies.empty()) fail(ErrorCode::EmptyBody, "nothing to render");
  for (const DiskPolygon& b : bodies)
    if (!compatible(spec.projection, b.geometry()))
      fail(ErrorCode::ProjectionMismatch, std::string(to_string(spec.projection)) +
                                              " projection does not fit a " +
                                              std::string(to_string(b.geometry())) + " body");
  if (spec.tilde_frame && !compatible(spec.projection, spec.tilde_frame->g))
    fail(ErrorCode::ProjectionMismatch, "tilde frame geometry does not fit the projection");

  // Viewport: sampled boundaries and overlay points, or the whole disk for Poincare.
  std::vector<P2> pts;
  std::vector<Circle> overlay_circles;
  for (const DiskPolygon& b : bodies) {
    for (const Point& x : b.sample_boundary(256)) pts.push_back(project(x, spec.projection));
    if (spec.circumdisk) {
      Disk d = circumdisk(b);
      overlay_circles.emplace_back(d.center, d.radius);
    }
    if (spec.indisk) {
      Disk d = indisk(b);
      overlay_circles.emplace_back(d.center, d.radius);
    }
  }
  for (const Circle& c : overlay_circles)
    for (int k = 0; k < 64; ++k) pts.push_back(project(c.at(2.0 * pi * k / 64), spec.projection));
  std::vector<std::pair<std::string, Point>> labels;
  if (spec.tilde_frame) {
    const TildeFrame& fr = *spec.tilde_frame;
    labels.push_back({"p", fr.p});
    for (int i = 0; i < 3; ++i) {
      labels.push_back({"q" + std::to_string(i + 1), fr.q[i]});
      labels.push_back({"t" + std::to_string(i + 1), fr.t[i]});
      for (int j = 0; j < 3; ++j)
        if (fr.w[i][j]) labels.push_back({"w" + std::to_string(i + 1) + std::to_string(j + 1), *fr.w[i][j]});
    }
    for (const auto& l : labels) pts.push_back(project(l.second, spec.projection));
  }
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const P2& p : pts) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  if (spec.projection == Projection::poincare) xmin = ymin = -1.0, xmax = ymax = 1.0;
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  Canvas cv(spec, xmin - pad, xmax + pad, ymin - pad, ymax + pad);

  std::ostringstream out;
  const std::string sz = std::to_string(spec.size_px);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << sz << "\" height=\"" << sz
      << "\" viewBox=\"0 0 " << sz << " " << sz << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (spec.projection == Projection::poincare) {
    P2 o = cv.screen(P2{0.0, 0.0});
    out << "<circle class=\"frame\" cx=\"" << num(o[0]) << "\" cy=\"" << num(o[1]) << "\" r=\""
        << num(cv.scale()) << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  }
  for (size_t k = 0; k < bodies.size(); ++k) {
    const DiskPolygon& b = bodies[k];
    std::string d;
    for (size_t i = 0; i < b.arcs().size(); ++i) d += arc_path(cv, b.arcs()[i], i == 0);
    d += "Z";
    const char* color = kPalette[k % 5];
    out << "<path class=\"body\" d=\"" << d << "\" fill=\"" << color << "\" fill-opacity=\"0.12\" stroke=\""
        << color << "\" stroke-width=\"" << num(spec.stroke_width) << "\"/>\n";
    if (spec.centers && b.kind() != DiskPolygon::Kind::ball) {
      for (const Point& c : b.active_centers()) {
        P2 s = cv.screen(c);
        out << "<circle class=\"center\" cx=\"" << num(s[0]) << "\" cy=\"" << num(s[1])
            << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
      }
    }
  }
  for (const Circle& c : overlay_circles)
    out << "<path class=\"overlay\" d=\"" << circle_path(cv, c)
        << "\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
  for (const auto& [name, x] : labels) {
    P2 s = cv.screen(x);
    out << "<circle class=\"label-point\" cx=\"" << num(s[0]) << "\" cy=\"" << num(s[1])
        << "\" r=\"2\" fill=\"black\"/>\n"
        << "<text x=\"" << num(s[0] + 4.0) << "\" y=\"" << num(s[1] - 4.0)
        << "\" font-family=\"serif\" font-size=\"13\">" << (name == "p" ? "p̃" : name.substr(0, 1) + "̃")
        << (name.size() > 1 ? "<tspan baseline-shift=\"sub\" font-size=\"9\">" + name.substr(1) + "</tspan>" : "")
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cwidth

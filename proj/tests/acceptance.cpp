// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "cwidth/area.hpp"
#include "cwidth/experiments.hpp"
#include "cwidth/render.hpp"

using namespace cwidth;
using std::numbers::pi;

namespace {

struct Config {
  Geometry g;
  double D;
};

const Config kPopulations[] = {{Geometry::euclidean, 1.0},
                               {Geometry::spherical, 1.0},
                               {Geometry::spherical, pi / 4},
                               {Geometry::hyperbolic, 1.0}};
const Geometry kAll[] = {Geometry::euclidean, Geometry::spherical, Geometry::hyperbolic};
constexpr std::uint64_t kSeed = 20240611;

std::string name(Geometry g) { return std::string(to_string(g)); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// U_D followed by 100 random completed bodies.
std::vector<DiskPolygon> population(const Config& c) {
  std::vector<DiskPolygon> out = {reuleaux_triangle(c.D, c.g)};
  for (int i = 0; i < 100; ++i) {
    std::uint64_t s = row_seed(kSeed, i);
    out.push_back(random_constant_width(c.D, c.g, 3 + static_cast<int>(s % 8), s));
  }
  return out;
}

struct Golden {
  std::string label;
  DiskPolygon body;
};

DiskPolygon lens(Geometry g, double D) {
  PolarFrame f(Point::reference(g));
  return DiskPolygon::build({f.center(), f.at(D, 0.0)}, D);
}

std::vector<Golden> golden_bodies() {
  std::vector<Golden> out;
  for (Geometry g : kAll) {
    const double D = g == Geometry::spherical ? pi / 4 : 1.0;
    const double r = reuleaux_inradius(D, g), mid = (r + D / 2) / 2;
    const std::string n = name(g);
    out.push_back({n + " reuleaux", reuleaux_triangle(D, g)});
    out.push_back({n + " pentagon(0.01)", pentagon(D, 0.01, g)});
    out.push_back({n + " pentagon(0.2)", pentagon(D, 0.2, g)});
    out.push_back({n + " q_tilde", q_tilde(D, mid, g)});
    out.push_back({n + " w_tilde", w_tilde(D, mid, g)});
    out.push_back({n + " ball", DiskPolygon::ball(Point::reference(g), D / 2)});
    out.push_back({n + " lens", lens(g, D)});
    out.push_back({n + " random", random_constant_width(D, g, 8, kSeed)});
    out.push_back({n + " t_operator", t_operator(random_seed_points(D, g, 5, kSeed), D)});
  }
  return out;
}

double dense_diameter(const DiskPolygon& K) {
  std::vector<Point> pts = K.sample_boundary(4096);
  for (const Point& v : K.vertices()) pts.push_back(v);
  double best = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
  return best;
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const Error& e) {
    detail = std::string("error ") + std::string(to_string(e.code())) + ": " + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%s; %.1f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::vector<std::vector<DiskPolygon>> pops;
  std::vector<std::vector<RadiiReport>> pop_radii;

  criterion(1, "radii identity r + R = D", [&] {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const Config& c : kPopulations) {
      pops.push_back(population(c));
      pop_radii.emplace_back();
      for (const DiskPolygon& K : pops.back()) {
        RadiiReport r = radii(K);
        pop_radii.back().push_back(r);
        worst = std::max(worst, std::abs(r.inradius + r.circumradius - c.D));
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::pair{worst <= 1e-7 && secs <= 60.0, "worst |r+R-D| = " + fmt("%.3g", worst) + ", 404 bodies"};
  });

  criterion(2, "Jung sandwich D/2 <= R <= R(Delta)", [&] {
    double worst = -INFINITY;
    for (size_t k = 0; k < pop_radii.size(); ++k) {
      const Config& c = kPopulations[k];
      const double Rt = regular_triangle_circumradius(c.D, c.g);
      for (const RadiiReport& r : pop_radii[k])
        worst = std::max({worst, c.D / 2 - r.circumradius, r.circumradius - Rt});
    }
    return std::pair{worst <= 1e-9, "worst bound excess = " + fmt("%.3g", worst)};
  });

  criterion(3, "Blaschke-Lebesgue V(K) >= V(U_D)", [&] {
    int violations = 0;
    double worst = -INFINITY;
    for (size_t k = 0; k < pops.size(); ++k) {
      const double VU = area(pops[k][0]).total;
      for (const DiskPolygon& K : pops[k]) {
        double deficit = VU - area(K).total;
        worst = std::max(worst, deficit);
        if (deficit > 1e-8) ++violations;
      }
    }
    DiskPolygon U = reuleaux_triangle(1.0, Geometry::euclidean);
    const double exact = (pi - std::sqrt(3.0)) / 2;
    double fan = area(U, AreaMethod::fan).total, gb = area(U, AreaMethod::gauss_bonnet).total;
    MonteCarloArea mc = monte_carlo_area(U, 1000000, kSeed);
    double z = std::abs(mc.area - exact) / mc.std_error;
    bool ok = violations == 0 && std::abs(fan - exact) <= 1e-9 && std::abs(gb - exact) <= 1e-9 && z <= 3.0;
    return std::pair{ok, std::to_string(violations) + " violations, worst deficit " + fmt("%.3g", worst) +
                             ", |fan - (pi-sqrt3)/2| = " + fmt("%.3g", std::abs(fan - exact)) +
                             ", Monte Carlo z = " + fmt("%.2f", z)};
  });

  criterion(4, "hyperbolic circumradius law anchors", [&] {
    const Geometry h = Geometry::hyperbolic;
    double law = 0.0;
    for (double D : {0.1, 1.0, 5.0}) {
      // Right triangle center / edge midpoint / vertex: sinh(D/2) = sinh(R) sin(pi/3).
      double R = radii(reuleaux_triangle(D, h)).circumradius;
      law = std::max(law, std::abs(std::sinh(D / 2) - std::sinh(R) * std::sin(pi / 3)) / std::sinh(D / 2));
    }
    double small = regular_triangle_circumradius(1e-4, h) / 0.5e-4 - 2 / std::sqrt(3.0);
    double large = regular_triangle_circumradius(20.0, h) - 10.0 - std::log(2 / std::sqrt(3.0));
    bool ok = law <= 1e-10 && std::abs(small) <= 1e-3 && std::abs(large) <= 1e-4;
    return std::pair{ok, "law of sines rel. error " + fmt("%.3g", law) + ", small-D limit error " +
                             fmt("%.3g", small) + ", large-D limit error " + fmt("%.3g", large)};
  });

  criterion(5, "area chain V(Q~) > V(W~) >= V(U_D)", [&] {
    bool ok = true;
    double worst = -INFINITY;
    for (Geometry g : kAll) {
      SweepReport r = area_chain(g, 1.0, 50);
      ok = ok && r.pass;
      worst = std::max(worst, r.worst_margin);
    }
    return std::pair{ok, "3 x 50 rho values, worst margin " + fmt("%.3g", worst)};
  });

  criterion(6, "linear stability fits (a), (b), (c)", [&] {
    bool ok = true;
    std::string detail;
    StabilityOptions opts;
    opts.eta_grid = log_grid(1e-4, 1e-2, 9);
    for (Geometry g : kAll) {
      auto t0 = std::chrono::steady_clock::now();
      SweepReport r = stability_fit(g, g == Geometry::spherical ? pi / 4 : 1.0, opts);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      ok = ok && r.pass && secs <= 300.0;
      double a = 0, b = 0, c = 0;
      for (const ReportRow& row : r.rows) {
        if (row.param_name == "fit_a_area" && row.quantity == "slope") a = row.value;
        if (row.param_name == "fit_b_hausdorff" && row.quantity == "slope") b = row.value;
        if (row.param_name == "fit_c_q_tilde") c = row.value;
      }
      detail += name(g) + " a=" + fmt("%.4f", a) + " b=" + fmt("%.4f", b) + " c=" + fmt("%.4f", c) + " " +
                fmt("%.0f s", secs) + "; ";
    }
    return std::pair{ok, detail.substr(0, detail.size() - 2)};
  });

  criterion(7, "hyperbolic horospherical width characterization", [&] {
    const Geometry h = Geometry::hyperbolic;
    SweepReport u = horo_width_check(reuleaux_triangle(1.0, h), 64);
    SweepReport p = horo_width_check(pentagon(1.0, 0.01, h), 64);
    SweepReport l = horo_width_check(lens(h, 1.0), 64);
    bool ok = u.pass && p.pass && u.worst_margin <= 1e-6 && p.worst_margin <= 1e-6 && l.worst_margin >= 0.01;
    return std::pair{ok, "U_D " + fmt("%.3g", u.worst_margin) + ", P " + fmt("%.3g", p.worst_margin) +
                             ", lens " + fmt("%.3g", l.worst_margin)};
  });

  const std::vector<Golden> golden = golden_bodies();

  criterion(8, "completeness modes agree", [&] {
    int disagreements = 0, complete_count = 0;
    for (const Golden& b : golden) {
      bool f = is_complete(b.body, CompletenessMode::fixpoint).complete;
      bool m = is_complete(b.body, CompletenessMode::farthest).complete;
      bool d = is_complete(b.body, CompletenessMode::dekster).complete;
      if (f != m || m != d) {
        ++disagreements;
        std::printf("  disagreement on %s: %d %d %d\n", b.label.c_str(), f, m, d);
      }
      complete_count += m;
    }
    return std::pair{disagreements == 0, std::to_string(golden.size()) + " golden bodies, " +
                                             std::to_string(complete_count) + " complete, " +
                                             std::to_string(disagreements) + " disagreements"};
  });

  criterion(9, "area and diameter oracle equivalence", [&] {
    double worst_gb = 0.0, worst_z = 0.0, worst_diam = 0.0;
    for (const Golden& b : golden) {
      double fan = area(b.body, AreaMethod::fan).total;
      worst_gb = std::max(worst_gb, std::abs(fan - area(b.body, AreaMethod::gauss_bonnet).total));
      MonteCarloArea mc = monte_carlo_area(b.body, 1000000, kSeed);
      worst_z = std::max(worst_z, std::abs(mc.area - fan) / mc.std_error);
      worst_diam = std::max(worst_diam, std::abs(diameter(b.body).value - dense_diameter(b.body)));
    }
    bool ok = worst_gb <= 1e-9 && worst_z <= 3.0 && worst_diam <= 1e-6;
    return std::pair{ok, "fan vs Gauss-Bonnet " + fmt("%.3g", worst_gb) + ", Monte Carlo worst z " +
                             fmt("%.2f", worst_z) + ", diameter vs dense " + fmt("%.3g", worst_diam)};
  });

  criterion(10, "byte-identical CSV and SVG across runs", [&] {
    auto produce = [] {
      std::ostringstream csv;
      write_csv_header(csv);
      write_csv(csv, bl_verify(Geometry::hyperbolic, 1.0, 30, 7));
      write_csv(csv, radii_sweep(Geometry::spherical, pi / 4, 30, 7));
      write_csv(csv, area_chain(Geometry::euclidean, 1.0, 20));
      std::string svg;
      for (Geometry g : kAll) {
        RenderSpec spec;
        spec.projection = default_projection(g);
        spec.circumdisk = spec.indisk = spec.centers = true;
        spec.tilde_frame = tilde_frame(1.0, 0.45, g);
        svg += render_svg({q_tilde(1.0, 0.45, g), random_constant_width(1.0, g, 6, 7)}, spec);
      }
      return std::pair{csv.str(), svg};
    };
    auto first = produce();
    auto second = produce();
    bool ok = first == second;
    return std::pair{ok, std::to_string(first.first.size()) + " CSV bytes, " +
                             std::to_string(first.second.size()) + " SVG bytes"};
  });

  return failures == 0 ? 0 : 1;
}

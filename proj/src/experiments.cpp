#include "cwidth/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "cwidth/area.hpp"
#include "cwidth/optimize.hpp"

namespace cwidth {

using std::numbers::pi;

void SweepReport::add(ReportRow row) {
  worst_margin = rows.empty() ? row.margin : std::max(worst_margin, row.margin);
  pass = pass && row.pass;
  rows.push_back(std::move(row));
}

std::uint64_t row_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 step on master + index.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

ReportRow info(const std::string& pname, double pval, const std::string& q, double v) {
  return {pname, pval, q, v, 0.0, true};
}

// Assertion row: passes when margin <= tol.
ReportRow check(const std::string& pname, double pval, const std::string& q, double v, double margin,
                double tol) {
  return {pname, pval, q, v, margin, margin <= tol};
}

SweepReport make_report(const std::string& id, Geometry g, double D) {
  SweepReport r;
  r.experiment = id;
  r.g = g;
  r.D = D;
  return r;
}

DiskPolygon random_body(Geometry g, double D, std::uint64_t seed, bool inject) {
  const int n_seeds = 3 + static_cast<int>(seed % 8);
  return random_constant_width(D, g, n_seeds, seed, inject);
}

void add_fit(SweepReport& rep, const std::string& name, const LinearFit& fit) {
  rep.add(check(name, NAN, "slope", fit.slope, -fit.slope, 0.0));
  rep.rows.back().pass = fit.slope > 0.0;
  rep.pass = rep.pass && fit.slope > 0.0;
  rep.add(info(name, NAN, "slope_stderr", fit.slope_stderr));
  rep.add(info(name, NAN, "r_squared", fit.r_squared));
}

}  // namespace

SweepReport bl_verify(Geometry g, double D, int trials, std::uint64_t seed, bool inject_triangle) {
  if (trials < 1) fail(ErrorCode::DomainError, "trials must be at least 1");
  SweepReport rep = make_report("bl", g, D);
  const double VU = area(reuleaux_triangle(D, g)).total;
  rep.add(info("reference", NAN, "area_reuleaux", VU));
  double vmin = INFINITY;
  int argmin = -1;
  int violations = 0;
  std::optional<DiskPolygon> minimizer;
  for (int i = 0; i < trials; ++i) {
    DiskPolygon K = random_body(g, D, row_seed(seed, i), inject_triangle);
    double V = area(K).total;
    rep.add(check("trial", i, "area", V, VU - V, 1e-8));
    if (!rep.rows.back().pass) ++violations;
    if (V < vmin) {
      vmin = V;
      argmin = i;
      minimizer = K;
    }
  }
  rep.add(info("summary", argmin, "area_min", vmin));
  rep.add(check("summary", NAN, "violations", violations, violations, 0.0));
  // Near-equality: a body close in area to U_D should be close to some Reuleaux triangle.
  if (vmin - VU <= 1e-4) {
    double dist = best_fit_reuleaux(*minimizer).distance;
    rep.add(check("summary", argmin, "best_fit_hausdorff", dist, dist, 1e-2));
  }
  return rep;
}

SweepReport radii_sweep(Geometry g, double D, int trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorCode::DomainError, "trials must be at least 1");
  SweepReport rep = make_report("radii", g, D);
  const double R_tri = regular_triangle_circumradius(D, g);
  auto measure = [&](const std::string& pname, double pval, const DiskPolygon& K) {
    RadiiReport rr = radii(K);
    double sum = rr.inradius + rr.circumradius;
    rep.add(check(pname, pval, "r_plus_R", sum, std::abs(sum - D), 1e-7));
    double jung = std::max(D / 2.0 - rr.circumradius, rr.circumradius - R_tri);
    rep.add(check(pname, pval, "circumradius", rr.circumradius, jung, 1e-9));
    double gap = distance(rr.incenter, rr.circumcenter);
    rep.add(check(pname, pval, "center_gap", gap, gap, 1e-6));
  };
  DiskPolygon U = reuleaux_triangle(D, g);
  measure("reuleaux", NAN, U);
  double RU = radii(U).circumradius;
  rep.add(check("reuleaux", NAN, "circumradius_vs_triangle", RU, std::abs(RU - R_tri), 1e-9));
  measure("ball", NAN, DiskPolygon::ball(Point::reference(g), D / 2.0));
  for (int i = 0; i < trials; ++i) measure("trial", i, random_body(g, D, row_seed(seed, i), false));
  return rep;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2) return {lo};
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = lo * std::pow(hi / lo, static_cast<double>(k) / (n - 1));
  return out;
}

BestFit best_fit_reuleaux(const DiskPolygon& K) {
  const Geometry g = K.geometry();
  const double D = K.width();
  const Point c0 = circumdisk(K).center;
  const PolarFrame f(c0);
  const double period = 2.0 * pi / 3.0;
  auto pose_of = [&](const std::vector<double>& x) {
    double r = std::hypot(x[0], x[1]);
    Point c = r > 0.0 ? f.at(r, std::atan2(x[1], x[0])) : c0;
    double rot = std::fmod(x[2], period);
    if (rot < 0.0) rot += period;
    return ReuleauxTrianglePose{D, g, c, rot};
  };
  auto objective = [&](int samples) {
    return [&, samples](const std::vector<double>& x) {
      try {
        return hausdorff(K, reuleaux_triangle(pose_of(x)), samples);
      } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
      }
    };
  };
  const double off = 0.05 * D;
  std::vector<std::vector<double>> starts;
  for (int k = 0; k < 3; ++k) {
    double rot = period * k / 3.0;
    starts.push_back({0.0, 0.0, rot});
    for (int j = 0; j < 3; ++j) {
      double a = 2.0 * pi * j / 3.0 + pi / 6.0;
      starts.push_back({off * std::cos(a), off * std::sin(a), rot});
    }
  }
  // Coarse search from every start, then polish the best one at full sampling.
  NelderMeadResult best{{}, INFINITY, 0};
  for (const auto& s : starts) {
    NelderMeadResult r = nelder_mead(objective(256), s, 0.02 * D, 1e-10, 1500);
    if (r.value < best.value) best = r;
  }
  NelderMeadResult fine = nelder_mead(objective(2048), best.x, 1e-3 * D, 1e-10, 1500);
  return {pose_of(fine.x), fine.value};
}

SweepReport stability_fit(Geometry g, double D, const StabilityOptions& opts) {
  SweepReport rep = make_report("stability", g, D);
  const DiskPolygon U = reuleaux_triangle(D, g);
  const double VU = area(U).total;
  const double r = reuleaux_inradius(D, g);
  const double eta_max = pentagon_eta_max(D, g);
  rep.add(info("reference", NAN, "area_reuleaux", VU));
  rep.add(info("reference", NAN, "pentagon_eta_max", eta_max));

  // (a), (b): the pentagon family.
  std::vector<double> etas, dV, dH;
  double theta_hat = 0.0;
  for (double eta : opts.eta_grid) {
    if (eta >= eta_max) fail(ErrorCode::EtaTooLarge, "eta grid exceeds the pentagon range");
    DiskPolygon P = pentagon(D, eta, g);
    double excess = area(P).total - VU;
    rep.add(info("eta", eta, "eps_add", excess));
    rep.add(info("eta", eta, "eps_mult", excess / VU));
    etas.push_back(eta);
    dV.push_back(excess);
    if (opts.fit_hausdorff) {
      double h = eta == 0.0 ? 0.0 : best_fit_reuleaux(P).distance;
      rep.add(info("eta", eta, "hausdorff_best_fit", h));
      dH.push_back(h);
      if (excess > 0.0) theta_hat = std::max(theta_hat, h / (excess / VU));
    }
  }
  if (etas.size() >= 3) {
    LinearFit fa = fit_line(etas, dV);
    add_fit(rep, "fit_a_area", fa);
    rep.rows.back().pass = fa.r_squared > 0.999;
    rep.pass = rep.pass && rep.rows.back().pass;
    auto [lin, quad] = fit_linear_quadratic(etas, dV);
    double contamination = std::abs(quad) * etas.back() / std::abs(lin);
    rep.add(check("fit_a_area", NAN, "quadratic_ratio", contamination, contamination, 0.05));
    if (opts.fit_hausdorff) {
      add_fit(rep, "fit_b_hausdorff", fit_line(etas, dH));
      rep.add(info("fit_b_hausdorff", NAN, "theta_hat", theta_hat));
    }
  }

  // (c): (V(Q~) - V(U_D)) / eta over a grid in eta = rho - r.
  const double span = D / 2.0 - r;
  double ratio_min = INFINITY;
  for (double eta : log_grid(std::min(1e-4, span / 10.0), span, opts.rho_points)) {
    double ratio = (area(q_tilde(D, r + eta, g)).total - VU) / eta;
    rep.add(info("eta_rho", eta, "q_tilde_ratio", ratio));
    ratio_min = std::min(ratio_min, ratio);
  }
  rep.add(check("fit_c_q_tilde", NAN, "ratio_min", ratio_min, -ratio_min, 0.0));
  rep.rows.back().pass = ratio_min > 0.0;
  rep.pass = rep.pass && ratio_min > 0.0;

  // Angle deficit 2pi/3 - angle(w12, p, w13) against eta on a small-eta grid.
  std::vector<double> ae, deficit;
  for (double eta : log_grid(std::min(1e-4, span / 100.0), 0.05 * span, opts.rho_points)) {
    TildeFrame fr = tilde_frame(D, r + eta, g);
    double a = angle(*fr.w[0][1], fr.p, *fr.w[0][2]);
    rep.add(info("eta_rho", eta, "w_angle", a));
    ae.push_back(eta);
    deficit.push_back(2.0 * pi / 3.0 - a);
  }
  add_fit(rep, "fit_angle_deficit", fit_line(ae, deficit));
  return rep;
}

SweepReport horo_width_check(const DiskPolygon& K, int samples) {
  if (K.geometry() != Geometry::hyperbolic)
    fail(ErrorCode::MismatchedGeometry, "horospherical width needs a hyperbolic body");
  if (samples < 1) fail(ErrorCode::DomainError, "samples must be at least 1");
  SweepReport rep = make_report("horo-width", K.geometry(), K.width());
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    double phi = 2.0 * pi * k / samples;
    double w = horospherical_width(K, ideal_point(phi));
    double dev = std::abs(w - K.width());
    worst = std::max(worst, dev);
    rep.add(check("ideal_angle", phi, "horo_width", w, dev, 1e-6));
  }
  rep.add(check("summary", NAN, "max_deviation", worst, worst, 1e-6));
  return rep;
}

SweepReport area_chain(Geometry g, double D, int grid_points) {
  if (grid_points < 1) fail(ErrorCode::DomainError, "grid_points must be at least 1");
  SweepReport rep = make_report("area-chain", g, D);
  const double VU = area(reuleaux_triangle(D, g)).total;
  const double r = reuleaux_inradius(D, g);
  rep.add(info("reference", NAN, "area_reuleaux", VU));
  auto both = [&](const DiskPolygon& K) {
    double fan = area(K, AreaMethod::fan).total;
    double gb = area(K, AreaMethod::gauss_bonnet).total;
    return std::pair{fan, std::abs(fan - gb)};
  };
  for (int k = 1; k <= grid_points; ++k) {
    double rho = r + (D / 2.0 - r) * k / grid_points;
    auto [VQ, dq] = both(q_tilde(D, rho, g));
    auto [VW, dw] = both(w_tilde(D, rho, g));
    rep.add(info("rho", rho, "area_q_tilde", VQ));
    rep.add(info("rho", rho, "area_w_tilde", VW));
    ReportRow strict = check("rho", rho, "q_minus_w", VQ - VW, VW - VQ, 0.0);
    strict.pass = VQ > VW;
    rep.add(strict);
    rep.add(check("rho", rho, "w_minus_u", VW - VU, VU - VW, 1e-9));
    rep.add(check("rho", rho, "fan_vs_gauss_bonnet", std::max(dq, dw), std::max(dq, dw), 1e-9));
    double dec = disk_area(g, rho) + 3.0 * gamma_tilde_area(D, rho, g);
    rep.add(check("rho", rho, "q_decomposition", dec, std::abs(dec - VQ), 1e-9));
  }
  return rep;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv_header(std::ostream& out) {
  out << "experiment,geometry,D,param_name,param_value,quantity,value,margin,pass\n";
}

void write_csv(std::ostream& out, const SweepReport& report) {
  for (const ReportRow& row : report.rows) {
    out << report.experiment << ',' << to_string(report.g) << ',' << format_number(report.D) << ','
        << row.param_name << ',' << format_number(row.param_value) << ',' << row.quantity << ','
        << format_number(row.value) << ',' << format_number(row.margin) << ','
        << (row.pass ? "true" : "false") << '\n';
  }
}

}  // namespace cwidth

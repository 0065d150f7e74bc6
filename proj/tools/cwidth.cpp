// cwidth: construct, measure, verify and render constant-width bodies in E², S² and H².
//
// Exit codes: 0 success, 1 a verification assertion failed, 2 usage or validation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "cwidth/area.hpp"
#include "cwidth/body_io.hpp"
#include "cwidth/experiments.hpp"
#include "cwidth/render.hpp"
#include "json.hpp"

using namespace cwidth;

namespace {

struct Common {
  std::string geometry = "euclidean";
  double width = 1.0;
  std::uint64_t seed = 1;
  std::string out;
};

// Writes to --out, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::InvalidFile, "cannot write " + path);
  f << text;
}

std::vector<Point> load_points(const std::string& path, Geometry g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidFile, "cannot read " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_object() && j.contains("points")) j = j["points"];
  if (!j.is_array()) fail(ErrorCode::InvalidFile, "points file must hold an array of coordinates");
  std::vector<Point> pts;
  try {
    for (const auto& c : j) pts.push_back(Point::from_coords(g, c.get<std::vector<double>>()));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidFile, e.what());
  }
  return pts;
}

int run_construct(const Common& c, const std::string& kind, double rho, double eta, int n_seeds,
                  double rotation, const std::string& points) {
  const Geometry g = geometry_from_string(c.geometry);
  const double D = c.width;
  DiskPolygon body = [&] {
    if (kind == "reuleaux") return reuleaux_triangle({D, g, Point::reference(g), rotation});
    if (kind == "w-tilde") return w_tilde(D, rho, g);
    if (kind == "q-tilde") return q_tilde(D, rho, g);
    if (kind == "pentagon") return pentagon(D, eta, g);
    if (kind == "random") return random_constant_width(D, g, n_seeds, c.seed);
    if (points.empty()) fail(ErrorCode::DomainError, "complete-of-points needs --points");
    return complete(load_points(points, g), D);
  }();
  emit(c.out, body_to_json(body));
  return 0;
}

int run_measure(const std::string& file, std::vector<std::string> quantities, bool csv,
                const std::string& out) {
  DiskPolygon K = load_body(file);
  if (quantities.empty()) quantities = {"area", "perimeter", "diameter", "inradius", "circumradius", "complete"};
  SweepReport rep;
  rep.experiment = "measure";
  rep.g = K.geometry();
  rep.D = K.width();
  for (const std::string& q : quantities) {
    ReportRow row;
    row.quantity = q;
    if (q == "area") {
      row.value = area(K).total;
    } else if (q == "perimeter") {
      row.value = perimeter(K);
    } else if (q == "diameter") {
      row.value = diameter(K).value;
      row.margin = row.value - K.width();
    } else if (q == "inradius") {
      row.value = indisk(K).radius;
    } else if (q == "circumradius") {
      row.value = circumdisk(K).radius;
    } else if (q == "complete") {
      CompletenessResult r = is_complete(K, CompletenessMode::farthest);
      row.value = r.complete ? 1.0 : 0.0;
      row.margin = r.margin;
      row.pass = r.complete;
    } else {
      fail(ErrorCode::DomainError, "unknown quantity '" + q + "'");
    }
    rep.rows.push_back(row);
  }
  std::ostringstream s;
  if (csv) {
    write_csv_header(s);
    write_csv(s, rep);
  } else {
    for (const ReportRow& r : rep.rows)
      s << r.quantity << ' ' << (r.quantity == "complete" ? (r.pass ? "true" : "false") : format_number(r.value))
        << '\n';
  }
  emit(out, s.str());
  return 0;
}

int run_verify(const Common& c, const std::string& experiment, int trials, const std::string& file,
               const std::vector<double>& etas, int samples, int grid) {
  const Geometry g = geometry_from_string(c.geometry);
  SweepReport rep = [&] {
    if (experiment == "bl") return bl_verify(g, c.width, trials, c.seed);
    if (experiment == "radii") return radii_sweep(g, c.width, trials, c.seed);
    if (experiment == "stability") {
      StabilityOptions opts;
      opts.eta_grid = etas.empty() ? log_grid(1e-4, 1e-2, 9) : etas;
      return stability_fit(g, c.width, opts);
    }
    if (experiment == "horo-width") {
      if (file.empty()) fail(ErrorCode::DomainError, "horo-width needs --file");
      return horo_width_check(load_body(file), samples);
    }
    return area_chain(g, c.width, grid);
  }();
  std::ostringstream s;
  write_csv_header(s);
  write_csv(s, rep);
  emit(c.out, s.str());
  if (!rep.pass) {
    std::cerr << "verify " << experiment << ": FAIL (worst margin " << format_number(rep.worst_margin) << ")\n";
    return 1;
  }
  return 0;
}

int run_render(const std::vector<std::string>& files, const std::string& projection,
               const std::vector<std::string>& overlays, double rho, int size, double stroke,
               const std::string& out) {
  std::vector<DiskPolygon> bodies;
  for (const std::string& f : files) bodies.push_back(load_body(f));
  RenderSpec spec;
  spec.projection =
      projection.empty() ? default_projection(bodies.front().geometry()) : projection_from_string(projection);
  spec.size_px = size;
  spec.stroke_width = stroke;
  for (const std::string& o : overlays) {
    if (o == "circumdisk") {
      spec.circumdisk = true;
    } else if (o == "indisk") {
      spec.indisk = true;
    } else if (o == "centers") {
      spec.centers = true;
    } else if (o == "tilde-frame") {
      if (!(rho > 0.0)) fail(ErrorCode::DomainError, "tilde-frame overlay needs --rho");
      spec.tilde_frame = tilde_frame(bodies.front().width(), rho, bodies.front().geometry());
    } else {
      fail(ErrorCode::DomainError, "unknown overlay '" + o + "'");
    }
  }
  emit(out, render_svg(bodies, spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-width bodies in E2, S2 and H2"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--geometry", common.geometry, "euclidean | spherical | hyperbolic")
        ->check(CLI::IsMember({"euclidean", "spherical", "hyperbolic", "E2", "S2", "H2"}));
    sub->add_option("--width", common.width, "Width D");
    if (with_seed) sub->add_option("--seed", common.seed, "Master seed");
    sub->add_option("--out", common.out, "Output file (stdout if omitted)");
  };

  auto* construct = app.add_subcommand("construct", "Write a body file");
  std::string kind;
  double rho = 0.0, eta = 0.0, rotation = 0.0;
  int n_seeds = 6;
  std::string points;
  construct->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"reuleaux", "w-tilde", "q-tilde", "pentagon", "random", "complete-of-points"}));
  construct->add_option("--rho", rho, "Inner radius for w-tilde / q-tilde");
  construct->add_option("--eta", eta, "Pentagon parameter");
  construct->add_option("--seeds", n_seeds, "Number of random seed points");
  construct->add_option("--rotation", rotation, "Reuleaux rotation (radians)");
  construct->add_option("--points", points, "JSON array of point coordinates");
  add_common(construct, true);

  auto* measure = app.add_subcommand("measure", "Measure a body file");
  std::string measure_file;
  std::vector<std::string> quantities;
  bool csv = false;
  measure->add_option("file", measure_file)->required();
  measure->add_option("--quantity", quantities, "area perimeter diameter inradius circumradius complete");
  measure->add_flag("--csv", csv, "Emit rows in the experiment CSV schema");
  measure->add_option("--out", common.out, "Output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Run a verification sweep and write a CSV report");
  std::string experiment;
  int trials = 100, samples = 64, grid = 50;
  std::string verify_file;
  std::vector<double> etas;
  verify->add_option("experiment", experiment)
      ->required()
      ->check(CLI::IsMember({"bl", "radii", "stability", "horo-width", "area-chain"}));
  verify->add_option("--trials", trials, "Random bodies per sweep");
  verify->add_option("--file", verify_file, "Body file (horo-width)");
  verify->add_option("--eta", etas, "Pentagon eta grid (stability)");
  verify->add_option("--samples", samples, "Ideal points (horo-width)");
  verify->add_option("--grid", grid, "Rho grid size (area-chain)");
  add_common(verify, true);

  auto* render = app.add_subcommand("render", "Render body files to SVG");
  std::vector<std::string> render_files;
  std::string projection;
  std::vector<std::string> overlays;
  int size = 600;
  double stroke = 1.5;
  render->add_option("files", render_files)->required();
  render->add_option("--projection", projection, "plane | poincare | stereographic");
  render->add_option("--overlay", overlays, "circumdisk indisk centers tilde-frame");
  render->add_option("--rho", rho, "Inner radius for the tilde-frame overlay");
  render->add_option("--size", size, "Canvas size in px");
  render->add_option("--stroke", stroke, "Stroke width");
  render->add_option("--out", common.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return run_construct(common, kind, rho, eta, n_seeds, rotation, points);
    if (*measure) return run_measure(measure_file, quantities, csv, common.out);
    if (*verify) return run_verify(common, experiment, trials, verify_file, etas, samples, grid);
    if (*render) return run_render(render_files, projection, overlays, rho, size, stroke, common.out);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

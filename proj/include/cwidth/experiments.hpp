#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "cwidth/constructions.hpp"

namespace cwidth {

struct ReportRow {
  std::string param_name;
  double param_value = std::numeric_limits<double>::quiet_NaN();
  std::string quantity;
  double value = 0.0;
  double margin = 0.0;
  bool pass = true;
};

struct SweepReport {
  std::string experiment;
  Geometry g = Geometry::euclidean;
  double D = 0.0;
  std::vector<ReportRow> rows;
  double worst_margin = 0.0;
  bool pass = true;

  // Appends a row and folds it into worst_margin / pass.
  void add(ReportRow row);
};

// Per-row seed derived from the master seed by row index.
std::uint64_t row_seed(std::uint64_t master, std::uint64_t index);

SweepReport bl_verify(Geometry g, double D, int trials, std::uint64_t seed, bool inject_triangle = false);
SweepReport radii_sweep(Geometry g, double D, int trials, std::uint64_t seed);

struct StabilityOptions {
  std::vector<double> eta_grid;  // pentagon parameters
  int rho_points = 12;           // grid for the Q~ ratio, log-spaced in eta = rho - r
  bool fit_hausdorff = true;     // fit (b) needs a best-fit search per grid point
};
std::vector<double> log_grid(double lo, double hi, int n);
SweepReport stability_fit(Geometry g, double D, const StabilityOptions& opts);

struct BestFit {
  ReuleauxTrianglePose pose;
  double distance;
};
BestFit best_fit_reuleaux(const DiskPolygon& K);

SweepReport horo_width_check(const DiskPolygon& K, int samples = 64);
SweepReport area_chain(Geometry g, double D, int grid_points = 50);

// CSV schema: experiment,geometry,D,param_name,param_value,quantity,value,margin,pass
void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const SweepReport& report);
std::string format_number(double x);

}  // namespace cwidth

#pragma once

#include <functional>
#include <vector>

namespace cwidth {

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int evaluations;
};

// Minimizes f from x0 with an initial simplex of edge `step`; stops when the
// simplex diameter drops below `xtol` or after `max_evals` evaluations.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, double xtol, int max_evals);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r_squared = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);
// Least squares y = a x + b x^2 (no intercept); returns {a, b}.
std::pair<double, double> fit_linear_quadratic(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace cwidth

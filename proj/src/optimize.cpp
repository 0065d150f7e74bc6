#include "cwidth/optimize.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cwidth {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, double xtol, int max_evals) {
  const size_t n = x0.size();
  std::vector<std::vector<double>> s(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (size_t i = 0; i < n; ++i) s[i + 1][i] += step;
  int evals = 0;
  for (size_t i = 0; i <= n; ++i) {
    fv[i] = f(s[i]);
    ++evals;
  }
  std::vector<size_t> idx(n + 1);
  auto point = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
    std::vector<double> p(n);
    for (size_t k = 0; k < n; ++k) p[k] = c[k] + t * (w[k] - c[k]);
    return p;
  };
  while (evals < max_evals) {
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    double diam = 0.0;
    for (size_t i = 1; i <= n; ++i)
      for (size_t k = 0; k < n; ++k) diam = std::max(diam, std::abs(s[idx[i]][k] - s[idx[0]][k]));
    if (diam < xtol) break;
    const size_t worst = idx[n], second = idx[n - 1], best = idx[0];
    std::vector<double> c(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) c[k] += s[idx[i]][k] / n;
    std::vector<double> xr = point(c, s[worst], -1.0);
    double fr = f(xr);
    ++evals;
    if (fr < fv[best]) {
      std::vector<double> xe = point(c, s[worst], -2.0);
      double fe = f(xe);
      ++evals;
      if (fe < fr) {
        s[worst] = xe;
        fv[worst] = fe;
      } else {
        s[worst] = xr;
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      s[worst] = xr;
      fv[worst] = fr;
    } else {
      bool outside = fr < fv[worst];
      std::vector<double> xc = point(c, outside ? xr : s[worst], 0.5);
      double fc = f(xc);
      ++evals;
      if (fc < (outside ? fr : fv[worst])) {
        s[worst] = xc;
        fv[worst] = fc;
      } else {
        for (size_t i = 1; i <= n; ++i) {
          s[idx[i]] = point(s[best], s[idx[i]], 0.5);
          fv[idx[i]] = f(s[idx[i]]);
          ++evals;
        }
      }
    }
  }
  size_t b = std::min_element(fv.begin(), fv.end()) - fv.begin();
  return {s[b], fv[b], evals};
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0;
  for (size_t i = 0; i < n; ++i) {
    double e = y[i] - fit.intercept - fit.slope * x[i];
    sse += e * e;
  }
  fit.r_squared = syy > 0 ? 1.0 - sse / syy : 1.0;
  fit.slope_stderr = n > 2 ? std::sqrt(sse / (n - 2) / sxx) : 0.0;
  return fit;
}

std::pair<double, double> fit_linear_quadratic(const std::vector<double>& x,
                                               const std::vector<double>& y) {
  Eigen::MatrixXd A(x.size(), 2);
  Eigen::VectorXd b(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    A(i, 0) = x[i];
    A(i, 1) = x[i] * x[i];
    b[i] = y[i];
  }
  Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
  return {c[0], c[1]};
}

}  // namespace cwidth

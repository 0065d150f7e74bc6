#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cwidth/body.hpp"

namespace cwidth {

enum class AreaMethod { fan, gauss_bonnet, monte_carlo };

struct AreaBreakdown {
  double total = 0.0;
  double triangle_part = 0.0;
  std::vector<std::pair<int, double>> segment_parts;
  AreaMethod method = AreaMethod::fan;
  bool fallback = false;  // gauss_bonnet requested on E², fan used instead
};

double triangle_area(const Point& a, const Point& b, const Point& c);
double sector_area(Geometry g, double r, double phi);
// Region between the chord [a, b] and the arc of `circle` from a to b in the given sense.
double circular_segment_area(const Point& a, const Point& b, const Circle& circle, bool ccw);

AreaBreakdown area(const DiskPolygon& body, AreaMethod method = AreaMethod::fan);

struct MonteCarloArea {
  double area;
  double std_error;
};
MonteCarloArea monte_carlo_area(const DiskPolygon& body, long n, std::uint64_t seed);

double perimeter(const DiskPolygon& body);

}  // namespace cwidth

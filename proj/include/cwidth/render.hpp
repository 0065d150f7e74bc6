#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwidth/constructions.hpp"

namespace cwidth {

enum class Projection { plane, poincare, stereographic };

std::string_view to_string(Projection p);
Projection projection_from_string(std::string_view s);
Projection default_projection(Geometry g);

struct RenderSpec {
  Projection projection = Projection::plane;
  int size_px = 600;
  double stroke_width = 1.5;
  bool circumdisk = false;
  bool indisk = false;
  bool centers = false;
  std::optional<TildeFrame> tilde_frame;  // labeled points of the W~/Q~ constructions
};

// SVG 1.1 document. Boundary arcs become exact circular-arc path commands, since all three
// projections map circles to circles.
std::string render_svg(const std::vector<DiskPolygon>& bodies, const RenderSpec& spec);

}  // namespace cwidth

#pragma once

#include <string>

#include "cwidth/body.hpp"

namespace cwidth {

// JSON body format:
//   {"geometry": "...", "width": D, "centers": [[x, y] or [x, y, t], ...]}
// Balls add "kind": "ball", "center", "radius". Arc chains add "kind": "arc_chain"
// and "arcs": [{"center", "radius", "start", "end"}, ...], all counterclockwise.
std::string body_to_json(const DiskPolygon& body);
DiskPolygon body_from_json(const std::string& text);

void save_body(const DiskPolygon& body, const std::string& path);
DiskPolygon load_body(const std::string& path);

}  // namespace cwidth

#include "cwidth/body_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cwidth {

using nlohmann::json;

namespace {

json point_json(const Point& p) { return p.coords(); }

Point json_point(Geometry g, const json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidFile, "point must be an array of numbers");
  std::vector<double> c;
  for (const json& v : j) {
    if (!v.is_number()) fail(ErrorCode::InvalidFile, "point coordinates must be numbers");
    c.push_back(v.get<double>());
  }
  // Two coordinates on S² or H² name the point above (x, y) on the model surface.
  if (g != Geometry::euclidean && c.size() == 2) {
    double s = c[0] * c[0] + c[1] * c[1];
    if (g == Geometry::spherical && s > 1.0) fail(ErrorCode::InvalidFile, "(x, y) outside the unit disk");
    c.push_back(g == Geometry::spherical ? std::sqrt(1.0 - s) : std::sqrt(1.0 + s));
  }
  return Point::from_coords(g, c);
}

double json_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    fail(ErrorCode::InvalidFile, std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

const json& json_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    fail(ErrorCode::InvalidFile, std::string("missing array field '") + key + "'");
  return j.at(key);
}

DiskPolygon parse(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidFile, "body file must hold a JSON object");
  if (!j.contains("geometry") || !j.at("geometry").is_string())
    fail(ErrorCode::InvalidFile, "missing string field 'geometry'");
  const Geometry g = geometry_from_string(j.at("geometry").get<std::string>());
  const double D = json_number(j, "width");
  const std::string kind = j.value("kind", std::string("intersection"));
  if (kind == "ball") return DiskPolygon::ball(json_point(g, j.at("center")), json_number(j, "radius"));
  if (kind == "arc_chain") {
    std::vector<Arc> arcs;
    for (const json& a : json_array(j, "arcs")) {
      Circle c(json_point(g, a.at("center")), json_number(a, "radius"));
      arcs.push_back(Arc::from_endpoints(c, json_point(g, a.at("start")), json_point(g, a.at("end")), true));
    }
    return DiskPolygon::from_arcs(g, D, std::move(arcs));
  }
  if (kind != "intersection") fail(ErrorCode::InvalidFile, "unknown body kind '" + kind + "'");
  std::vector<Point> centers;
  for (const json& c : json_array(j, "centers")) centers.push_back(json_point(g, c));
  if (centers.empty()) fail(ErrorCode::InvalidFile, "body has no centers");
  return DiskPolygon::build(centers, D);
}

}  // namespace

std::string body_to_json(const DiskPolygon& body) {
  json j;
  j["geometry"] = std::string(to_string(body.geometry()));
  j["width"] = body.width();
  json centers = json::array();
  switch (body.kind()) {
    case DiskPolygon::Kind::intersection:
      for (const Point& c : body.centers()) centers.push_back(point_json(c));
      j["centers"] = centers;
      break;
    case DiskPolygon::Kind::ball: {
      const Circle& c = body.arcs().front().circle();
      j["kind"] = "ball";
      j["center"] = point_json(c.center());
      j["radius"] = c.radius();
      j["centers"] = json::array({point_json(c.center())});
      break;
    }
    case DiskPolygon::Kind::arc_chain: {
      j["kind"] = "arc_chain";
      json arcs = json::array();
      for (const Arc& a : body.arcs()) {
        centers.push_back(point_json(a.circle().center()));
        arcs.push_back({{"center", point_json(a.circle().center())},
                        {"radius", a.circle().radius()},
                        {"start", point_json(a.start())},
                        {"end", point_json(a.end())}});
      }
      j["centers"] = centers;
      j["arcs"] = arcs;
      break;
    }
  }
  return j.dump(2) + "\n";
}

DiskPolygon body_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::InvalidFile, "body file is not valid JSON");
  try {
    return parse(j);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidFile, e.what());
  }
}

void save_body(const DiskPolygon& body, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidFile, "cannot write " + path);
  out << body_to_json(body);
}

DiskPolygon load_body(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidFile, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return body_from_json(ss.str());
}

}  // namespace cwidth

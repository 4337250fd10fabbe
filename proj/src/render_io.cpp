#include "monodisk/render_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "monodisk/error.hpp"
#include "monodisk/wedge.hpp"

namespace monodisk {

namespace {

using Json = nlohmann::ordered_json;

// ---- saving

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json segment_json(const PathSegment& s) {
  if (const auto* l = std::get_if<Line>(&s)) {
    Json j;
    j["type"] = "line";
    j["from"] = point_json(l->a);
    j["to"] = point_json(l->b);
    return j;
  }
  const auto& a = std::get<Arc>(s);
  Json j;
  j["type"] = "arc";
  j["center"] = point_json(a.center);
  j["radius"] = a.radius;
  j["start"] = a.start_angle;
  j["sweep"] = a.sweep;
  return j;
}

// ---- loading

[[noreturn]] void violation(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, (pointer.empty() ? "/" : pointer) + ": " + what);
}

// JSON pointer escaping of one reference token.
std::string token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

void only_keys(const Json& obj, const std::string& pointer, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) violation(pointer, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) violation(pointer + "/" + token(key), "unknown field");
  }
}

const Json& field(const Json& obj, const std::string& pointer, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) violation(pointer + "/" + key, "missing field");
  return *it;
}

double number(const Json& obj, const std::string& pointer, const char* key) {
  const auto& v = field(obj, pointer, key);
  if (!v.is_number()) violation(pointer + "/" + key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) violation(pointer + "/" + key, "expected a finite number");
  return x;
}

int integer(const Json& obj, const std::string& pointer, const char* key) {
  const auto& v = field(obj, pointer, key);
  if (!v.is_number_integer()) violation(pointer + "/" + key, "expected an integer");
  return v.get<int>();
}

std::string text(const Json& obj, const std::string& pointer, const char* key) {
  const auto& v = field(obj, pointer, key);
  if (!v.is_string()) violation(pointer + "/" + key, "expected a string");
  return v.get<std::string>();
}

Point point(const Json& obj, const std::string& pointer, const char* key) {
  const auto& v = field(obj, pointer, key);
  const std::string at = pointer + "/" + key;
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    violation(at, "expected [x, y]");
  const Point p{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) violation(at, "expected finite coordinates");
  return p;
}

PathSegment parse_segment(const Json& j, const std::string& pointer) {
  if (!j.is_object()) violation(pointer, "expected an object");
  const std::string type = text(j, pointer, "type");
  if (type == "line") {
    only_keys(j, pointer, {"type", "from", "to"});
    return Line{point(j, pointer, "from"), point(j, pointer, "to")};
  }
  if (type == "arc") {
    only_keys(j, pointer, {"type", "center", "radius", "start", "sweep"});
    Arc a{point(j, pointer, "center"), number(j, pointer, "radius"), number(j, pointer, "start"),
          number(j, pointer, "sweep")};
    if (a.radius <= 0) violation(pointer + "/radius", "radius must be positive");
    if (a.sweep == 0 || std::abs(a.sweep) >= kTwoPi) violation(pointer + "/sweep", "sweep must lie in (-2pi, 2pi) \\ {0}");
    return a;
  }
  violation(pointer + "/type", "segment type must be \"line\" or \"arc\"");
}

// ---- SVG

std::string num(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Screen coordinates: y flipped so the drawing keeps the usual orientation.
std::string xy(Point p) { return num(p.x) + " " + num(-p.y); }

std::string arc_command(const Arc& a) {
  // Split so no piece reaches pi and the large-arc flag is always 0.
  const int pieces = std::abs(a.sweep) >= kPi ? 2 : 1;
  std::string out;
  for (int i = 1; i <= pieces; ++i) {
    const Point end = a.center + a.radius * Point{std::cos(a.start_angle + a.sweep * i / pieces),
                                                  std::sin(a.start_angle + a.sweep * i / pieces)};
    // Counterclockwise in the plane is clockwise on screen, which SVG calls sweep-flag 1.
    out += " A " + num(a.radius) + " " + num(a.radius) + " 0 0 " + (a.sweep > 0 ? "1 " : "0 ") + xy(end);
  }
  return out;
}

std::string path_data(const Contour& c) {
  if (c.empty()) return "";
  std::string d = "M " + xy(start_point(c[0]));
  for (const auto& s : c.segments()) {
    if (const auto* l = std::get_if<Line>(&s)) d += " L " + xy(l->b);
    else d += arc_command(std::get<Arc>(s));
  }
  return d + " Z";
}

std::string svg_open(double cx, double cy, double half, int size_px) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(size_px) +
         "\" height=\"" + std::to_string(size_px) + "\" viewBox=\"" + num(cx - half) + " " + num(-cy - half) +
         " " + num(2 * half) + " " + num(2 * half) + "\">\n";
  return out;
}

}  // namespace

std::string save_tiling(const Tiling& t) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["disk"] = {{"cx", t.disk.center.x}, {"cy", t.disk.center.y}, {"r", t.disk.radius}};
  Json tiles = Json::array();
  for (const auto& tile : t.tiles) {
    Json path = Json::array();
    for (const auto& s : tile.boundary.segments()) path.push_back(segment_json(s));
    Json jt;
    jt["id"] = tile.id;
    jt["orientation"] = tile.orientation == Orientation::Positive ? "positive" : "negative";
    jt["path"] = std::move(path);
    tiles.push_back(std::move(jt));
  }
  doc["tiles"] = std::move(tiles);
  doc["metadata"] = {{"family", t.tag.family}, {"n", t.tag.n},       {"k", t.tag.k},
                     {"t", t.tag.t},           {"word", t.tag.word}, {"chirality", t.tag.chirality},
                     {"variant", t.tag.variant}};
  return doc.dump(2) + "\n";
}

Tiling load_tiling(std::string_view source) {
  Json doc;
  try {
    doc = Json::parse(source.begin(), source.end());
  } catch (const Json::parse_error& e) {
    violation("", std::string("not valid JSON: ") + e.what());
  }
  only_keys(doc, "", {"schema_version", "disk", "tiles", "metadata"});
  const int version = integer(doc, "", "schema_version");
  if (version != kSchemaVersion)
    throw Error(ErrorCode::VersionUnsupported, "schema_version " + std::to_string(version) + " is not supported");

  Tiling t;
  const auto& disk = field(doc, "", "disk");
  only_keys(disk, "/disk", {"cx", "cy", "r"});
  t.disk = {{number(disk, "/disk", "cx"), number(disk, "/disk", "cy")}, number(disk, "/disk", "r")};
  if (t.disk.radius <= 0) violation("/disk/r", "radius must be positive");

  const auto& tiles = field(doc, "", "tiles");
  if (!tiles.is_array()) violation("/tiles", "expected an array");
  std::set<int> ids;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::string at = "/tiles/" + std::to_string(i);
    const auto& jt = tiles[i];
    only_keys(jt, at, {"id", "orientation", "path"});
    Tile tile;
    tile.id = integer(jt, at, "id");
    if (!ids.insert(tile.id).second) violation(at + "/id", "duplicate tile id " + std::to_string(tile.id));
    const std::string o = text(jt, at, "orientation");
    if (o == "positive") tile.orientation = Orientation::Positive;
    else if (o == "negative") tile.orientation = Orientation::Negative;
    else violation(at + "/orientation", "expected \"positive\" or \"negative\"");
    const auto& path = field(jt, at, "path");
    if (!path.is_array() || path.empty()) violation(at + "/path", "expected a non-empty array");
    std::vector<PathSegment> segs;
    for (std::size_t s = 0; s < path.size(); ++s) segs.push_back(parse_segment(path[s], at + "/path/" + std::to_string(s)));
    tile.boundary = Contour(std::move(segs));
    if (!tile.boundary.is_closed())
      violation(at + "/path", "boundary of tile " + std::to_string(tile.id) + " is not closed");
    t.tiles.push_back(std::move(tile));
  }

  if (doc.contains("metadata")) {
    const auto& m = doc["metadata"];
    only_keys(m, "/metadata", {"family", "n", "k", "t", "word", "chirality", "variant"});
    if (m.contains("family")) t.tag.family = text(m, "/metadata", "family");
    if (m.contains("n")) t.tag.n = integer(m, "/metadata", "n");
    if (m.contains("k")) t.tag.k = integer(m, "/metadata", "k");
    if (m.contains("t")) t.tag.t = number(m, "/metadata", "t");
    if (m.contains("word")) t.tag.word = text(m, "/metadata", "word");
    if (m.contains("chirality")) t.tag.chirality = text(m, "/metadata", "chirality");
    if (m.contains("variant")) t.tag.variant = text(m, "/metadata", "variant");
  }
  return t;
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  out << contents;
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void save_tiling_file(const Tiling& t, const std::string& path) { write_text_file(path, save_tiling(t)); }

Tiling load_tiling_file(const std::string& path) { return load_tiling(read_text_file(path)); }

std::string to_svg(const Tiling& t, SvgStyle style, int size_px) {
  const double r = t.disk.radius;
  std::string out = svg_open(t.disk.center.x, t.disk.center.y, 1.05 * r, size_px);
  const std::string width = num(0.004 * r);
  out += "<circle cx=\"" + num(t.disk.center.x) + "\" cy=\"" + num(-t.disk.center.y) + "\" r=\"" + num(r) +
         "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" + width + "\"/>\n";
  for (const auto& tile : t.tiles) {
    std::string paint;
    if (style == SvgStyle::StrokeOnly) {
      paint = "fill=\"none\" stroke=\"#000000\"";
    } else {
      const bool positive = tile.orientation == Orientation::Positive;
      paint = std::string("fill=\"") + (positive ? "#3c3c3c" : "#c8102e") + "\" stroke=\"#ffffff\"";
    }
    out += "<path id=\"tile-" + std::to_string(tile.id) + "\" d=\"" + path_data(tile.boundary) + "\" " + paint +
           " stroke-width=\"" + width + "\" stroke-linejoin=\"round\"/>\n";
  }
  return out + "</svg>\n";
}

std::string locus_svg(int n, int size_px) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidN, "n must be an odd integer >= 3");
  const auto config = vertex_chain(n);
  const auto locus = critical_locus(n);
  const Point p = config.p;
  const Point q = config.q;

  // Upper configuration: chain points interleaved with their images about p.
  std::vector<Point> upper;
  for (std::size_t j = 0; j < config.chain.size(); ++j) {
    upper.push_back(config.chain[j]);
    if (j < config.mirror_chain.size() && distance(config.mirror_chain[j], config.chain[j]) > 1e-9 &&
        distance(config.mirror_chain[j], p) > 1e-9)
      upper.push_back(config.mirror_chain[j]);
  }

  // Where each bounding ray from q meets the radius-R circle about p.
  auto ray_end = [&](double angle) {
    const Point dir{std::cos(angle), std::sin(angle)};
    const Point w = q - p;
    const double b = dot(w, dir);
    const double s = -b + std::sqrt(b * b - (dot(w, w) - locus.R * locus.R));
    return q + s * dir;
  };
  const Point top = ray_end(locus.ray_angle);
  const Point bottom = ray_end(-locus.ray_angle);
  const double a_top = angle_of(top - p);
  const double a_bottom = angle_of(bottom - p);

  const double x_min = p.x - 0.3;
  const double x_max = p.x + locus.R + 0.3;
  double y_max = top.y;
  for (Point u : upper) y_max = std::max(y_max, u.y);
  const double cx = (x_min + x_max) / 2;
  const double half = std::max((x_max - x_min) / 2, y_max + 0.3);
  std::string out = svg_open(cx, 0.0, half, size_px);
  const std::string w = num(0.01 * half);
  out += "<path id=\"region\" d=\"M " + xy(q) + " L " + xy(bottom) + arc_command({p, locus.R, a_bottom, a_top - a_bottom}) +
         " Z\" fill=\"#dbe9f6\" stroke=\"none\"/>\n";
  out += "<line id=\"axis\" x1=\"" + num(p.x - 0.5) + "\" y1=\"0\" x2=\"" + num(p.x + locus.R + 0.2) +
         "\" y2=\"0\" stroke=\"#bbbbbb\" stroke-width=\"" + w + "\"/>\n";
  for (const auto& [name, end] : {std::pair{"ray-upper", top}, std::pair{"ray-lower", bottom}})
    out += std::string("<line id=\"") + name + "\" x1=\"" + num(q.x) + "\" y1=\"" + num(-q.y) + "\" x2=\"" +
           num(end.x) + "\" y2=\"" + num(-end.y) + "\" stroke=\"#1f5fa8\" stroke-width=\"" + w + "\"/>\n";
  out += "<path id=\"critical-arc\" d=\"M " + xy(bottom) + arc_command({p, locus.R, a_bottom, a_top - a_bottom}) +
         "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"" + w + "\"/>\n";

  auto polyline = [&](const std::vector<Point>& pts, const char* id, const char* colour) {
    std::string d = "M " + xy(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) d += " L " + xy(pts[i]);
    return std::string("<path id=\"") + id + "\" d=\"" + d + "\" fill=\"none\" stroke=\"" + colour +
           "\" stroke-width=\"" + w + "\"/>\n";
  };
  std::vector<Point> lower = upper;
  for (auto& u : lower) u.y = -u.y;
  out += polyline(upper, "chain-upper", "#444444");
  out += polyline(lower, "chain-lower", "#444444");
  const std::string dot_r = num(0.025 * half);
  for (Point u : upper)
    out += "<circle class=\"upper\" cx=\"" + num(u.x) + "\" cy=\"" + num(-u.y) + "\" r=\"" + dot_r + "\" fill=\"#000000\"/>\n";
  for (Point u : lower)
    out += "<circle class=\"lower\" cx=\"" + num(u.x) + "\" cy=\"" + num(-u.y) + "\" r=\"" + dot_r + "\" fill=\"#000000\"/>\n";

  const Point groove_end = q + Point{locus.t_max_symmetric, 0.0};
  out += "<line id=\"groove\" x1=\"" + num(q.x) + "\" y1=\"0\" x2=\"" + num(groove_end.x) +
         "\" y2=\"0\" stroke=\"#c8102e\" stroke-width=\"" + num(0.02 * half) + "\"/>\n";
  const std::string font = num(0.06 * half);
  auto label = [&](Point at, const std::string& s) {
    return "<text x=\"" + num(at.x) + "\" y=\"" + num(-at.y) + "\" font-size=\"" + font +
           "\" font-family=\"sans-serif\">" + s + "</text>\n";
  };
  out += label(p + Point{-0.1, -0.15}, "p");
  out += label(q + Point{-0.05, -0.15}, "q");
  char buf[64];
  std::snprintf(buf, sizeof buf, "t_max = %.6f", locus.t_max_symmetric);
  out += label(groove_end + Point{0.05, 0.08}, buf);
  std::snprintf(buf, sizeof buf, "R = %.6f", locus.R);
  out += label(p + Point{0.0, -0.35}, buf);
  return out + "</svg>\n";
}

}  // namespace monodisk

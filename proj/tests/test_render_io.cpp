#include <cmath>
#include <regex>

#include "doctest.h"
#include "json.hpp"
#include "monodisk/error.hpp"
#include "monodisk/render_io.hpp"

using namespace monodisk;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++count;
  return count;
}

bool same_segment(const PathSegment& a, const PathSegment& b) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<Line>(&a)) {
    const auto& lb = std::get<Line>(b);
    return la->a.x == lb.a.x && la->a.y == lb.a.y && la->b.x == lb.b.x && la->b.y == lb.b.y;
  }
  const auto& x = std::get<Arc>(a);
  const auto& y = std::get<Arc>(b);
  return x.center.x == y.center.x && x.center.y == y.center.y && x.radius == y.radius &&
         x.start_angle == y.start_angle && x.sweep == y.sweep;
}

}  // namespace

TEST_CASE("documents round-trip exactly") {
  const auto d3 = build_D(3, 0.0, Chirality::A);
  const std::string first = save_tiling(d3);
  const Tiling back = load_tiling(first);
  CHECK(save_tiling(back) == first);
  REQUIRE(back.tiles.size() == d3.tiles.size());
  for (std::size_t i = 0; i < d3.tiles.size(); ++i) {
    CHECK(back.tiles[i].id == d3.tiles[i].id);
    CHECK(back.tiles[i].orientation == d3.tiles[i].orientation);
    REQUIRE(back.tiles[i].boundary.size() == d3.tiles[i].boundary.size());
    for (std::size_t s = 0; s < d3.tiles[i].boundary.size(); ++s)
      CHECK(same_segment(back.tiles[i].boundary[s], d3.tiles[i].boundary[s]));
  }
  CHECK(back.tag.family == "D");
  CHECK(back.tag.chirality == "A");

  const auto c = build_C(5, 2, 0.1, {"LSSLSSLSSLSSSSSS", 5, 2});
  const auto loaded = load_tiling(save_tiling(c));
  CHECK(loaded.tag.word == "LSSLSSLSSLSSSSSS");
  const auto r = validate_tiling(loaded, {2000, 42});
  CHECK(r.valid);
  CHECK(r.monohedral);

  const auto doc = nlohmann::json::parse(first);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["tiles"].size() == 12);
}

TEST_CASE("malformed documents are rejected") {
  auto doc = nlohmann::ordered_json::parse(save_tiling(build_D(3, 0.0, Chirality::A)));

  auto open = doc;
  open["tiles"][4]["path"].erase(0);
  const std::string open_text = open.dump();
  CHECK(code_of([&] { load_tiling(open_text); }) == ErrorCode::SchemaViolation);
  const std::string msg = message_of([&] { load_tiling(open_text); });
  CHECK(msg.find("/tiles/4/path") == 0);
  CHECK(msg.find("tile 4") != std::string::npos);

  auto extra = doc;
  extra["tiles"][0]["colour"] = "blue";
  CHECK(message_of([&] { load_tiling(extra.dump()); }).find("/tiles/0/colour") == 0);

  auto slash = doc;
  slash["a/b"] = 1;
  CHECK(message_of([&] { load_tiling(slash.dump()); }).find("/a~1b") == 0);

  auto bad_type = doc;
  bad_type["tiles"][1]["path"][0]["type"] = "bezier";
  CHECK(message_of([&] { load_tiling(bad_type.dump()); }).find("/tiles/1/path/0/type") == 0);

  auto bad_number = doc;
  bad_number["disk"]["r"] = "one";
  CHECK(message_of([&] { load_tiling(bad_number.dump()); }).find("/disk/r") == 0);

  auto missing = doc;
  missing.erase("disk");
  CHECK(code_of([&] { load_tiling(missing.dump()); }) == ErrorCode::SchemaViolation);

  auto dup = doc;
  dup["tiles"][1]["id"] = 0;
  CHECK(message_of([&] { load_tiling(dup.dump()); }).find("/tiles/1/id") == 0);

  auto future = doc;
  future["schema_version"] = 2;
  CHECK(code_of([&] { load_tiling(future.dump()); }) == ErrorCode::VersionUnsupported);

  CHECK(code_of([] { load_tiling("{not json"); }) == ErrorCode::SchemaViolation);
  CHECK(code_of([] { load_tiling_file("/nonexistent/dir/file.json"); }) == ErrorCode::Io);
}

TEST_CASE("svg output") {
  const auto d3 = build_D(3, 0.0, Chirality::A);
  const std::string svg = to_svg(d3, SvgStyle::OrientationColored, 400);
  CHECK(svg == to_svg(d3, SvgStyle::OrientationColored, 400));
  CHECK(count_of(svg, "<path ") == 12);
  CHECK(count_of(svg, "fill=\"#c8102e\"") == 6);
  CHECK(count_of(svg, "fill=\"#3c3c3c\"") == 6);
  CHECK(svg.find("viewBox=\"-1.050000 -1.050000 2.100000 2.100000\"") != std::string::npos);
  CHECK(svg.find("width=\"400\"") != std::string::npos);

  const auto all_s = build_C(3, 2, 0.0, {std::string(12, 'S'), 3, 2});
  const std::string plain = to_svg(all_s, SvgStyle::OrientationColored);
  CHECK(count_of(plain, "<path ") == 12);
  CHECK(count_of(plain, "#c8102e") == 0);
  CHECK(count_of(to_svg(all_s, SvgStyle::StrokeOnly), "fill=\"none\"") == 13);

  // Every number carries exactly six decimals, and no arc piece is large.
  const std::regex number(R"(-?\d+\.\d+)");
  const std::string body = svg.substr(svg.find("viewBox"));
  for (auto it = std::sregex_iterator(body.begin(), body.end(), number); it != std::sregex_iterator(); ++it) {
    const std::string s = it->str();
    CHECK(s.size() - s.find('.') - 1 == 6);
  }
  const std::regex arc(R"(A (\S+) (\S+) 0 (\d) (\d) (\S+) (\S+))");
  int arcs = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), arc); it != std::sregex_iterator(); ++it) {
    CHECK((*it)[3] == "0");
    ++arcs;
  }
  CHECK(arcs > 0);

  // A full disk drawn as one tile needs its arc split.
  Tiling whole;
  whole.tiles.push_back({0, Contour({Arc{{0, 0}, 1.0, 0.0, kPi}, Arc{{0, 0}, 1.0, kPi, 1.5 * kPi - 1e-3},
                                     Arc{{0, 0}, 1.0, 2.5 * kPi - 1e-3, 0.5 * kPi + 1e-3}}),
                         Orientation::Positive});
  const std::string split = to_svg(whole, SvgStyle::StrokeOnly);
  CHECK(count_of(split, " A ") == 5);
}

TEST_CASE("locus diagram") {
  const std::string three = locus_svg(3);
  CHECK(count_of(three, "class=\"upper\"") == 3);
  CHECK(count_of(three, "class=\"lower\"") == 3);
  // Chain vertices (1,0), (0,sqrt 3), (-1,0) and the reflection, y flipped on screen.
  CHECK(three.find("cx=\"0.000000\" cy=\"-1.732051\"") != std::string::npos);
  CHECK(three.find("cx=\"0.000000\" cy=\"1.732051\"") != std::string::npos);
  CHECK(three.find("cx=\"1.000000\" cy=\"0.000000\"") != std::string::npos);
  CHECK(three.find("cx=\"-1.000000\" cy=\"0.000000\"") != std::string::npos);
  char buf[64];
  std::snprintf(buf, sizeof buf, "t_max = %.6f", critical_locus(3).t_max_symmetric);
  CHECK(three.find(buf) != std::string::npos);

  const std::string five = locus_svg(5);
  CHECK(count_of(five, "class=\"upper\"") == 5);
  CHECK(count_of(five, "class=\"lower\"") == 5);
  CHECK(five.find("t_max = 0.656") != std::string::npos);
  CHECK(code_of([] { locus_svg(4); }) == ErrorCode::InvalidN);
}

#include <algorithm>
#include <random>
#include <sstream>

#include "monodisk/error.hpp"
#include "monodisk/families.hpp"

namespace monodisk {

namespace {

// Irregular interior parameters, away from midpoints where cuts often land.
constexpr double kEdgeSamples[] = {0.3183, 0.6919};
constexpr std::size_t kMaxFailureLines = 20;

struct Box {
  Point lo, hi;
  bool contains(Point p, double pad) const {
    return p.x >= lo.x - pad && p.x <= hi.x + pad && p.y >= lo.y - pad && p.y <= hi.y + pad;
  }
};

void fail(TilingReport& r, const std::string& msg) {
  if (r.failures.size() < kMaxFailureLines) r.failures.push_back(msg);
}

// Nearest segment of a contour to pt and its parameter there.
std::pair<std::size_t, double> nearest_segment(const Contour& c, Point pt) {
  std::size_t best = 0;
  double best_d = 1e300;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double d = distance_to(c[i], pt);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return {best, project(c[best], pt)};
}

// Finds a tile whose rotated/reflected image of `image` coincides with it.
bool maps_onto_itself(const Tiling& t, const std::vector<Point>& centroids, const Isometry& g,
                      double tol) {
  std::vector<bool> used(t.tiles.size(), false);
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const Point c = g(centroids[i]);
    bool found = false;
    for (std::size_t j = 0; j < t.tiles.size() && !found; ++j) {
      if (used[j] || distance(centroids[j], c) > 1e-6 * t.disk.radius) continue;
      if (same_contour(apply_isometry(g, t.tiles[i].boundary), t.tiles[j].boundary, tol)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TilingReport validate_tiling(const Tiling& t, const ValidationOptions& options) {
  TilingReport r;
  const auto& tiles = t.tiles;
  const Point center = t.disk.center;
  const double radius = t.disk.radius;
  const double tol = kGeomTol * radius;
  r.tile_count = static_cast<int>(tiles.size());
  if (tiles.empty()) {
    fail(r, "tiling has no tiles");
    return r;
  }

  // (1) well-formed tiles
  bool well_formed = true;
  for (const auto& tile : tiles) {
    if (!tile.boundary.is_closed()) {
      fail(r, "tile " + std::to_string(tile.id) + " is not closed");
      well_formed = false;
    } else if (!contour_is_simple(tile.boundary).simple) {
      fail(r, "tile " + std::to_string(tile.id) + " is not simple");
      well_formed = false;
    }
  }
  if (!well_formed) return r;

  // (2) area conservation
  double area = 0.0;
  for (const auto& tile : tiles) area += std::abs(contour_area(tile.boundary));
  const double disk_area = kPi * radius * radius;
  r.area_error = std::abs(area - disk_area) / disk_area;
  if (r.area_error > kGeomTol) {
    std::ostringstream msg;
    msg << "tile areas sum to " << area << ", disk area is " << disk_area;
    fail(r, msg.str());
  }

  // (3) containment, and the touch counts
  std::vector<Box> boxes;
  for (const auto& tile : tiles) {
    const auto [lo, hi] = tile.boundary.bounds();
    boxes.push_back({lo, hi});
    double far = 0.0;
    for (const auto& s : tile.boundary.segments()) far = std::max(far, max_distance_to(s, center));
    if (far > radius + tol) fail(r, "tile " + std::to_string(tile.id) + " leaves the disk");
    if (far >= radius * (1.0 - kGeomTol)) ++r.boundary_touch_count;
    if (point_location(center, tile.boundary, tol) != Location::Outside) ++r.center_touch_count;
  }

  // (4) edge matching
  int mismatches = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto& segs = tiles[i].boundary.segments();
    for (std::size_t s = 0; s < segs.size(); ++s) {
      for (double u : kEdgeSamples) {
        const Point x = point_at(segs[s], u);
        if (std::abs(distance(x, center) - radius) <= tol) continue;
        const Point tangent = tangent_at(segs[s], u);
        int touching = 0;
        bool opposite = false;
        for (std::size_t j = 0; j < tiles.size(); ++j) {
          if (j == i || !boxes[j].contains(x, tol)) continue;
          if (distance_to(tiles[j].boundary, x) > tol) continue;
          ++touching;
          const auto [seg, v] = nearest_segment(tiles[j].boundary, x);
          opposite = dot(tangent, tangent_at(tiles[j].boundary[seg], v)) < -1.0 + 1e-6;
        }
        if (touching != 1 || !opposite) {
          ++mismatches;
          std::ostringstream msg;
          msg << "edge of tile " << tiles[i].id << " (segment " << s << ") is matched by " << touching
              << " tiles" << (touching == 1 ? " with the same direction" : "");
          fail(r, msg.str());
        }
      }
    }
  }

  // (5) Monte Carlo coverage
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double band = 1e-6 * radius;
  for (int drawn = 0; drawn < options.samples; ++drawn) {
    Point offset{unit(rng), unit(rng)};
    while (dot(offset, offset) > 1.0) offset = {unit(rng), unit(rng)};
    const Point x = center + radius * offset;
    if (radius - distance(x, center) <= band) continue;
    int covering = 0;
    bool near_edge = false;
    for (std::size_t j = 0; j < tiles.size() && !near_edge; ++j) {
      if (!boxes[j].contains(x, band)) continue;
      if (distance_to(tiles[j].boundary, x) <= band) near_edge = true;
      else if (winding_number(x, tiles[j].boundary) != 0) ++covering;
    }
    if (near_edge) continue;
    ++r.samples;
    if (covering == 0) ++r.uncovered;
    if (covering > 1) ++r.multiply_covered;
  }
  if (r.uncovered > 0) fail(r, std::to_string(r.uncovered) + " sample points are not covered");
  if (r.multiply_covered > 0)
    fail(r, std::to_string(r.multiply_covered) + " sample points are covered more than once");

  // (6) congruence of every pair
  r.monohedral = true;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (std::size_t j = i + 1; j < tiles.size(); ++j) {
      const auto c = congruent(tiles[i].boundary, tiles[j].boundary);
      r.max_congruence_residual = std::max(r.max_congruence_residual, c.residual);
      if (!c.congruent) r.monohedral = false;
    }
  }

  // symmetry
  std::vector<Point> centroids;
  for (const auto& tile : tiles) centroids.push_back(approximate_centroid(tile.boundary));
  const double match_tol = 1e-7 * radius;
  for (int d = r.tile_count; d >= 1; --d) {
    if (d == 1 || maps_onto_itself(t, centroids, Isometry::rotation(center, kTwoPi / d), match_tol)) {
      r.cyclic_symmetry_order = d;
      break;
    }
  }
  std::vector<double> axes;
  const double a0 = angle_of(centroids[0] - center);
  for (const auto& c : centroids) axes.push_back(0.5 * (a0 + angle_of(c - center)));
  for (double axis : axes) {
    if (maps_onto_itself(t, centroids, Isometry::reflection(center, axis), match_tol) ||
        maps_onto_itself(t, centroids, Isometry::reflection(center, axis + kPi / 2), match_tol)) {
      r.has_mirror_symmetry = true;
      break;
    }
  }

  r.valid = r.area_error <= kGeomTol && mismatches == 0 && r.uncovered == 0 &&
            r.multiply_covered == 0 && std::none_of(r.failures.begin(), r.failures.end(), [](const auto& f) {
              return f.find("leaves the disk") != std::string::npos;
            });
  if (!r.monohedral) fail(r, "tiles are not all congruent");
  return r;
}

EdgeWord edge_word_of(const Tiling& t) {
  if (t.tag.family != "C") throw Error(ErrorCode::NotCFamily, "tiling is not a member of the C family");
  const int n = t.tag.n;
  const int k = t.tag.k;
  const double tol = 1e-7 * t.disk.radius;
  struct Span {
    double start;
    double sweep;
  };
  std::vector<Span> spans;
  for (const auto& tile : t.tiles) {
    const Contour boundary = normalized(tile.boundary);
    for (const auto& s : boundary.segments()) {
      const auto* a = std::get_if<Arc>(&s);
      if (!a || distance(a->center, t.disk.center) > tol || std::abs(a->radius - t.disk.radius) > tol)
        continue;
      double start = a->sweep > 0 ? a->start_angle : a->start_angle + a->sweep;
      start = std::fmod(start, kTwoPi);
      if (start < -1e-9) start += kTwoPi;
      if (start >= kTwoPi - 1e-9) start -= kTwoPi;
      spans.push_back({start, std::abs(a->sweep)});
    }
  }
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.start < b.start; });
  EdgeWord word;
  word.n = n;
  word.k = k;
  const double short_span = kPi / (n * k);
  const double long_span = kPi / n;
  for (const auto& s : spans) {
    if (std::abs(s.sweep - short_span) <= 1e-6) word.letters += 'S';
    else if (std::abs(s.sweep - long_span) <= 1e-6) word.letters += 'L';
    else throw Error(ErrorCode::UnrecognizedSpan, "boundary arc of span " + std::to_string(s.sweep) +
                                                      " is neither long nor short");
  }
  return word;
}

bool same_tiling(const Tiling& a, const Tiling& b, bool allow_rotation) {
  if (a.tiles.size() != b.tiles.size() || a.tiles.empty()) return false;
  if (distance(a.disk.center, b.disk.center) > 1e-9 || std::abs(a.disk.radius - b.disk.radius) > 1e-9)
    return false;
  const double tol = 1e-7 * a.disk.radius;
  auto matches_under = [&](const Isometry& g) {
    std::vector<bool> used(b.tiles.size(), false);
    for (const auto& ta : a.tiles) {
      const Contour image = apply_isometry(g, ta.boundary);
      const Point c = approximate_centroid(image);
      bool found = false;
      for (std::size_t j = 0; j < b.tiles.size() && !found; ++j) {
        if (used[j] || b.tiles[j].orientation != ta.orientation) continue;
        if (distance(approximate_centroid(b.tiles[j].boundary), c) > 1e-6) continue;
        if (same_contour(image, b.tiles[j].boundary, tol)) used[j] = found = true;
      }
      if (!found) return false;
    }
    return true;
  };
  if (!allow_rotation) return matches_under(Isometry::identity());
  const Point c0 = approximate_centroid(a.tiles[0].boundary) - a.disk.center;
  for (const auto& tb : b.tiles) {
    const Point cb = approximate_centroid(tb.boundary) - b.disk.center;
    if (std::abs(norm(cb) - norm(c0)) > 1e-6) continue;
    const double angle = angle_of(cb) - angle_of(c0);
    if (matches_under(Isometry::rotation(a.disk.center, angle))) return true;
  }
  return false;
}

}  // namespace monodisk

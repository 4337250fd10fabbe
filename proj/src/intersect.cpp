#include <algorithm>

#include "monodisk/geometry.hpp"

namespace monodisk {

namespace {

void add_unique(std::vector<Point>& out, Point p, double tol) {
  for (const auto& q : out)
    if (distance(p, q) <= tol) return;
  out.push_back(p);
}

bool on_segment(const PathSegment& s, Point p, double tol) {
  if (const auto* a = std::get_if<Arc>(&s)) {
    if (std::abs(distance(p, a->center) - a->radius) > tol) return false;
    const double slack = tol / (a->radius * std::abs(a->sweep));
    const double u = arc_parameter(*a, p);
    return u >= -slack && u <= 1.0 + slack;
  }
  return distance_to(s, p) <= tol;
}

void line_line(const Line& l1, const Line& l2, double tol, std::vector<Point>& out) {
  const Point d1 = l1.b - l1.a;
  const Point d2 = l2.b - l2.a;
  const double len1 = norm(d1);
  const double len2 = norm(d2);
  if (len1 == 0.0 || len2 == 0.0) return;
  const double denom = cross(d1, d2);
  if (std::abs(denom) <= kAlgebraTol * len1 * len2) {
    // Parallel: only the collinear overlap matters, and its endpoints are
    // found by the endpoint checks in the caller.
    return;
  }
  const Point w = l2.a - l1.a;
  const double t = cross(w, d2) / denom;
  const double u = cross(w, d1) / denom;
  if (t >= -tol / len1 && t <= 1.0 + tol / len1 && u >= -tol / len2 && u <= 1.0 + tol / len2)
    add_unique(out, l1.a + t * d1, tol);
}

void line_circle(const Line& l, const Arc& a, double tol, std::vector<Point>& out) {
  const Point d = l.b - l.a;
  const double len = norm(d);
  if (len == 0.0) return;
  const Point dir = d / len;
  const double along = dot(a.center - l.a, dir);
  const Point foot = l.a + along * dir;
  const double h = distance(foot, a.center);
  std::vector<Point> cand;
  if (std::abs(h - a.radius) <= tol) {
    cand.push_back(foot);
  } else if (h < a.radius) {
    const double half = std::sqrt(a.radius * a.radius - h * h);
    cand.push_back(foot - half * dir);
    cand.push_back(foot + half * dir);
  }
  const PathSegment arc_seg = a;
  for (const auto& p : cand) {
    const double t = dot(p - l.a, dir);
    if (t >= -tol && t <= len + tol && on_segment(arc_seg, p, tol)) add_unique(out, p, tol);
  }
}

void circle_circle(const Arc& a1, const Arc& a2, double tol, std::vector<Point>& out) {
  const Point delta = a2.center - a1.center;
  const double d = norm(delta);
  if (d <= tol) return;  // concentric: co-circular overlap handled by endpoint checks
  const double r1 = a1.radius;
  const double r2 = a2.radius;
  std::vector<Point> cand;
  const Point u = delta / d;
  if (std::abs(d - (r1 + r2)) <= tol) {
    cand.push_back(a1.center + r1 * u);
  } else if (std::abs(d - std::abs(r1 - r2)) <= tol) {
    cand.push_back(a1.center + (r1 >= r2 ? r1 : -r1) * u);
  } else if (d < r1 + r2 && d > std::abs(r1 - r2)) {
    const double x = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double y = std::sqrt(std::max(0.0, r1 * r1 - x * x));
    const Point base = a1.center + x * u;
    cand.push_back(base + y * perp(u));
    cand.push_back(base - y * perp(u));
  }
  const PathSegment s1 = a1;
  const PathSegment s2 = a2;
  for (const auto& p : cand)
    if (on_segment(s1, p, tol) && on_segment(s2, p, tol)) add_unique(out, p, tol);
}

double extent(const PathSegment& s) {
  double e = length(s);
  if (const auto* a = std::get_if<Arc>(&s)) e = std::max(e, a->radius);
  return e;
}

}  // namespace

std::vector<Point> segment_intersections(const PathSegment& s1, const PathSegment& s2,
                                         double tol) {
  std::vector<Point> out;
  // Endpoint contacts first: they cover touching ends and the limits of
  // collinear or co-circular overlaps.
  for (Point p : {start_point(s1), end_point(s1)})
    if (on_segment(s2, p, tol)) add_unique(out, p, tol);
  for (Point p : {start_point(s2), end_point(s2)})
    if (on_segment(s1, p, tol)) add_unique(out, p, tol);

  const auto* l1 = std::get_if<Line>(&s1);
  const auto* l2 = std::get_if<Line>(&s2);
  const auto* a1 = std::get_if<Arc>(&s1);
  const auto* a2 = std::get_if<Arc>(&s2);
  if (l1 && l2) line_line(*l1, *l2, tol, out);
  else if (l1 && a2) line_circle(*l1, *a2, tol, out);
  else if (a1 && l2) line_circle(*l2, *a1, tol, out);
  else circle_circle(*a1, *a2, tol, out);
  return out;
}

std::vector<Point> segment_intersections(const PathSegment& s1, const PathSegment& s2) {
  return segment_intersections(s1, s2, kGeomTol * (extent(s1) + extent(s2)));
}

namespace {

SimplicityResult check_pairs(const std::vector<PathSegment>& segs, bool cyclic, double scale) {
  const std::size_t n = segs.size();
  const double tol = kGeomTol * scale;
  const double junction_slack = 1e-7 * scale;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Point> junctions;
      if (j == i + 1) junctions.push_back(end_point(segs[i]));
      if (cyclic && i == 0 && j == n - 1) junctions.push_back(start_point(segs[0]));
      for (const auto& p : segment_intersections(segs[i], segs[j], tol)) {
        const bool at_junction = std::any_of(junctions.begin(), junctions.end(), [&](Point q) {
          return distance(p, q) <= junction_slack;
        });
        if (!at_junction) return {false, p};
      }
      // Adjacent segments doubling back along each other meet in more than
      // the junction point.
      if (!junctions.empty()) {
        const PathSegment& a = segs[i];
        const PathSegment& b = segs[j];
        for (double u : {0.25, 0.5, 0.75}) {
          const Point pa = point_at(a, u);
          const Point pb = point_at(b, u);
          if (distance_to(b, pa) <= tol && distance(pa, junctions.front()) > junction_slack)
            return {false, pa};
          if (distance_to(a, pb) <= tol && distance(pb, junctions.front()) > junction_slack)
            return {false, pb};
        }
      }
    }
  }
  return {};
}

double path_scale(const std::vector<PathSegment>& segs) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& s : segs) {
    for (int i = 0; i <= 8; ++i) {
      const Point p = point_at(s, i / 8.0);
      lo_x = std::min(lo_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_x = std::max(hi_x, p.x);
      hi_y = std::max(hi_y, p.y);
    }
  }
  return std::max(std::hypot(hi_x - lo_x, hi_y - lo_y), 1e-300);
}

}  // namespace

SimplicityResult contour_is_simple(const Contour& c) {
  return check_pairs(c.segments(), true, path_scale(c.segments()));
}

SimplicityResult path_is_simple(const Path& path) {
  return check_pairs(path, false, path_scale(path));
}

}  // namespace monodisk

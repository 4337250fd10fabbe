#include "monodisk/geometry.hpp"

#include <algorithm>
#include <limits>

#include "monodisk/error.hpp"

namespace monodisk {

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

// ---------------------------------------------------------------------------
// Isometry

Isometry Isometry::identity() { return Isometry(1, 0, 0, 1, {}, Kind::Identity); }

Isometry Isometry::rotation(Point center, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Point rotated{c * center.x - s * center.y, s * center.x + c * center.y};
  return Isometry(c, -s, s, c, center - rotated, Kind::Rotation);
}

Isometry Isometry::translation(Point offset) {
  return Isometry(1, 0, 0, 1, offset, Kind::Translation);
}

Isometry Isometry::reflection(Point on_axis, double axis_angle) {
  const double c = std::cos(2.0 * axis_angle);
  const double s = std::sin(2.0 * axis_angle);
  const Point image{c * on_axis.x + s * on_axis.y, s * on_axis.x - c * on_axis.y};
  return Isometry(c, s, s, -c, on_axis - image, Kind::Reflection);
}

Isometry Isometry::from_parts(double m00, double m01, double m10, double m11, Point offset,
                              Kind kind) {
  return Isometry(m00, m01, m10, m11, offset, kind);
}

Point Isometry::apply_linear(Point v) const {
  return {m00_ * v.x + m01_ * v.y, m10_ * v.x + m11_ * v.y};
}

Point Isometry::operator()(Point pt) const { return apply_linear(pt) + offset_; }

Isometry Isometry::inverse() const {
  // Orthogonal: inverse of the linear part is its transpose.
  Isometry inv(m00_, m10_, m01_, m11_, {}, kind_);
  inv.offset_ = -inv.apply_linear(offset_);
  return inv;
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  using Kind = Isometry::Kind;
  if (inner.kind_ == Kind::Identity) return outer;
  if (outer.kind_ == Kind::Identity) return inner;
  Isometry out(outer.m00_ * inner.m00_ + outer.m01_ * inner.m10_,
               outer.m00_ * inner.m01_ + outer.m01_ * inner.m11_,
               outer.m10_ * inner.m00_ + outer.m11_ * inner.m10_,
               outer.m10_ * inner.m01_ + outer.m11_ * inner.m11_,
               outer.apply_linear(inner.offset_) + outer.offset_, Kind::Composition);
  return out;
}

Isometry power(const Isometry& g, int power) {
  Isometry out = Isometry::identity();
  for (int i = 0; i < power; ++i) out = compose(g, out);
  return out;
}

// ---------------------------------------------------------------------------
// Segments

Point arc_point(const Arc& arc, double angle) { return arc.center + polar(arc.radius, angle); }

Point start_point(const PathSegment& s) {
  if (const auto* l = std::get_if<Line>(&s)) return l->a;
  const auto& a = std::get<Arc>(s);
  return arc_point(a, a.start_angle);
}

Point end_point(const PathSegment& s) {
  if (const auto* l = std::get_if<Line>(&s)) return l->b;
  const auto& a = std::get<Arc>(s);
  return arc_point(a, a.start_angle + a.sweep);
}

Point point_at(const PathSegment& s, double u) {
  if (const auto* l = std::get_if<Line>(&s)) return l->a + u * (l->b - l->a);
  const auto& a = std::get<Arc>(s);
  return arc_point(a, a.start_angle + u * a.sweep);
}

Point tangent_at(const PathSegment& s, double u) {
  if (const auto* l = std::get_if<Line>(&s)) {
    const Point d = l->b - l->a;
    return d / norm(d);
  }
  const auto& a = std::get<Arc>(s);
  const double theta = a.start_angle + u * a.sweep;
  const double sign = a.sweep >= 0.0 ? 1.0 : -1.0;
  return {-sign * std::sin(theta), sign * std::cos(theta)};
}

double length(const PathSegment& s) {
  if (const auto* l = std::get_if<Line>(&s)) return distance(l->a, l->b);
  const auto& a = std::get<Arc>(s);
  return a.radius * std::abs(a.sweep);
}

PathSegment reversed(const PathSegment& s) {
  if (const auto* l = std::get_if<Line>(&s)) return Line{l->b, l->a};
  const auto& a = std::get<Arc>(s);
  return Arc{a.center, a.radius, wrap_angle(a.start_angle + a.sweep), -a.sweep};
}

PathSegment transformed(const PathSegment& s, const Isometry& g) {
  if (const auto* l = std::get_if<Line>(&s)) return Line{g(l->a), g(l->b)};
  const auto& a = std::get<Arc>(s);
  const Point dir = g.apply_linear(polar(1.0, a.start_angle));
  const double sign = g.reverses_orientation() ? -1.0 : 1.0;
  return Arc{g(a.center), a.radius, angle_of(dir), sign * a.sweep};
}

PathSegment scaled(const PathSegment& s, double factor) {
  if (const auto* l = std::get_if<Line>(&s)) return Line{factor * l->a, factor * l->b};
  const auto& a = std::get<Arc>(s);
  return Arc{factor * a.center, factor * a.radius, a.start_angle, a.sweep};
}

std::pair<PathSegment, PathSegment> split_at(const PathSegment& s, double u) {
  if (const auto* l = std::get_if<Line>(&s)) {
    const Point m = point_at(s, u);
    return {Line{l->a, m}, Line{m, l->b}};
  }
  const auto& a = std::get<Arc>(s);
  const double first = u * a.sweep;
  return {Arc{a.center, a.radius, a.start_angle, first},
          Arc{a.center, a.radius, wrap_angle(a.start_angle + first), a.sweep - first}};
}

double arc_parameter(const Arc& arc, Point pt) {
  const double theta = angle_of(pt - arc.center);
  double d = std::fmod(theta - arc.start_angle, kTwoPi);
  if (arc.sweep >= 0.0) {
    if (d < 0.0) d += kTwoPi;
  } else {
    if (d > 0.0) d -= kTwoPi;
  }
  double u = d / arc.sweep;
  if (u > 1.0) {
    // Slightly before the start reads as almost a full turn; pick the
    // representative nearest the arc.
    const double alt = (d - std::copysign(kTwoPi, arc.sweep)) / arc.sweep;
    if (std::abs(alt) < u - 1.0) u = alt;
  }
  return u;
}

double project(const PathSegment& s, Point pt) {
  if (const auto* l = std::get_if<Line>(&s)) {
    const Point d = l->b - l->a;
    const double len2 = dot(d, d);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(pt - l->a, d) / len2, 0.0, 1.0);
  }
  const auto& a = std::get<Arc>(s);
  if (distance(pt, a.center) == 0.0) return 0.0;
  const double u = arc_parameter(a, pt);
  if (u >= 0.0 && u <= 1.0) return u;
  return distance(pt, start_point(s)) <= distance(pt, end_point(s)) ? 0.0 : 1.0;
}

double distance_to(const PathSegment& s, Point pt) {
  if (const auto* a = std::get_if<Arc>(&s)) {
    const double u = arc_parameter(*a, pt);
    if (u >= 0.0 && u <= 1.0) return std::abs(distance(pt, a->center) - a->radius);
    return std::min(distance(pt, start_point(s)), distance(pt, end_point(s)));
  }
  return distance(pt, point_at(s, project(s, pt)));
}

double max_distance_to(const PathSegment& s, Point pt) {
  double best = std::max(distance(pt, start_point(s)), distance(pt, end_point(s)));
  if (const auto* a = std::get_if<Arc>(&s)) {
    const Point away = a->center - pt;
    const double d = norm(away);
    if (d > 0.0) {
      const Point far = a->center + (a->radius / d) * away;
      const double u = arc_parameter(*a, far);
      if (u >= 0.0 && u <= 1.0) best = std::max(best, d + a->radius);
    } else {
      best = a->radius;
    }
  }
  return best;
}

Path reversed(const Path& path) {
  Path out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

Path transformed(const Path& path, const Isometry& g) {
  Path out;
  out.reserve(path.size());
  for (const auto& s : path) out.push_back(transformed(s, g));
  return out;
}

double path_length(const Path& path) {
  double total = 0.0;
  for (const auto& s : path) total += length(s);
  return total;
}

Point path_point_at(const Path& path, double u) {
  const double target = std::clamp(u, 0.0, 1.0) * path_length(path);
  double walked = 0.0;
  for (const auto& s : path) {
    const double len = length(s);
    if (walked + len >= target && len > 0.0) return point_at(s, (target - walked) / len);
    walked += len;
  }
  return end_point(path.back());
}

// ---------------------------------------------------------------------------
// Contour

namespace {

// Dense sample of the boundary used for scale estimates.
std::vector<Point> boundary_samples(const Contour& c, int per_arc) {
  std::vector<Point> pts;
  for (const auto& s : c.segments()) {
    pts.push_back(start_point(s));
    if (is_arc(s)) {
      for (int i = 1; i < per_arc; ++i) pts.push_back(point_at(s, double(i) / per_arc));
    }
  }
  return pts;
}

}  // namespace

bool Contour::is_closed(double rel_tol) const {
  if (segments_.empty()) return false;
  const double tol = rel_tol * std::max(diameter(), 1e-300);
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& next = segments_[(i + 1) % segments_.size()];
    if (distance(end_point(segments_[i]), start_point(next)) > tol) return false;
  }
  return true;
}

double Contour::diameter() const {
  auto pts = boundary_samples(*this, 16);
  if (pts.size() < 2) return 0.0;
  // Farthest pair lies on the convex hull (monotone chain).
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 1 ? k - 1 : k);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, distance(hull[i], hull[j]));
  return best;
}

std::pair<Point, Point> Contour::bounds() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Point lo{inf, inf}, hi{-inf, -inf};
  auto grow = [&](Point p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  };
  for (const auto& s : segments_) {
    grow(start_point(s));
    grow(end_point(s));
    if (const auto* a = std::get_if<Arc>(&s)) {
      for (int q = 0; q < 4; ++q) {
        const Point extreme = arc_point(*a, q * kPi / 2);
        const double u = arc_parameter(*a, extreme);
        if (u >= 0.0 && u <= 1.0) grow(extreme);
      }
    }
  }
  return {lo, hi};
}

std::vector<Point> Contour::vertices() const {
  std::vector<Point> out;
  out.reserve(segments_.size());
  for (const auto& s : segments_) out.push_back(start_point(s));
  return out;
}

Contour reversed(const Contour& c) {
  std::vector<PathSegment> segs;
  segs.reserve(c.size());
  for (auto it = c.segments().rbegin(); it != c.segments().rend(); ++it)
    segs.push_back(reversed(*it));
  return Contour(std::move(segs));
}

Contour apply_isometry(const Isometry& g, const Contour& c) {
  std::vector<PathSegment> segs;
  segs.reserve(c.size());
  for (const auto& s : c.segments()) segs.push_back(transformed(s, g));
  return Contour(std::move(segs));
}

Contour scaled(const Contour& c, double factor) {
  std::vector<PathSegment> segs;
  segs.reserve(c.size());
  for (const auto& s : c.segments()) segs.push_back(scaled(s, factor));
  return Contour(std::move(segs));
}

double contour_area(const Contour& c) {
  if (!c.is_closed()) throw Error(ErrorCode::NotClosed, "contour is not closed");
  double twice = 0.0;
  for (const auto& s : c.segments()) {
    const Point a = start_point(s);
    const Point b = end_point(s);
    twice += cross(a, b);
    if (const auto* arc = std::get_if<Arc>(&s)) {
      // Circular segment between chord and arc.
      twice += arc->radius * arc->radius * (arc->sweep - std::sin(arc->sweep));
    }
  }
  return 0.5 * twice;
}

Point approximate_centroid(const Contour& c) {
  std::vector<Point> poly;
  for (const auto& s : c.segments()) {
    poly.push_back(start_point(s));
    if (is_arc(s)) {
      constexpr int kPieces = 32;
      for (int i = 1; i < kPieces; ++i) poly.push_back(point_at(s, double(i) / kPieces));
    }
  }
  double area2 = 0.0;
  Point acc{};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % poly.size()];
    const double w = cross(a, b);
    area2 += w;
    acc = acc + w * (a + b);
  }
  if (area2 == 0.0) return poly.empty() ? Point{} : poly.front();
  return acc / (3.0 * area2);
}

// ---------------------------------------------------------------------------
// Point location

namespace {

double subtended(Point pt, Point a, Point b) {
  const Point u = a - pt;
  const Point v = b - pt;
  return std::atan2(cross(u, v), dot(u, v));
}

}  // namespace

int winding_number(Point pt, const Contour& c) {
  double total = 0.0;
  for (const auto& s : c.segments()) {
    const Point a = start_point(s);
    const Point b = end_point(s);
    total += subtended(pt, a, b);
    if (const auto* arc = std::get_if<Arc>(&s)) {
      // The arc and its chord differ by a full turn exactly when pt lies in
      // the circular segment they enclose.
      if (distance(pt, arc->center) < arc->radius) {
        const Point mid = point_at(s, 0.5);
        const double side_pt = cross(b - a, pt - a);
        const double side_mid = cross(b - a, mid - a);
        if (side_pt * side_mid > 0.0) total += std::copysign(kTwoPi, arc->sweep);
      }
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double distance_to(const Contour& c, Point pt) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : c.segments()) best = std::min(best, distance_to(s, pt));
  return best;
}

Location point_location(Point pt, const Contour& c, double band) {
  if (band < 0.0) band = kGeomTol * c.diameter();
  if (distance_to(c, pt) <= band) return Location::Boundary;
  return winding_number(pt, c) != 0 ? Location::Inside : Location::Outside;
}

}  // namespace monodisk

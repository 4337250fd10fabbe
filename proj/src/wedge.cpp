#include "monodisk/wedge.hpp"

#include <algorithm>
#include <string>

#include "monodisk/error.hpp"

namespace monodisk {

namespace {

void require_odd_n(int n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::InvalidN, "n must be an odd integer >= 3, got " + std::to_string(n));
}

void append(Path& to, const Path& from) { to.insert(to.end(), from.begin(), from.end()); }

Path drop_degenerate(const Path& path) {
  Path out;
  for (const auto& s : path)
    if (length(s) > 1e-12) out.push_back(s);
  return out;
}

// Intersections of two paths away from an allowed point.
bool paths_meet_elsewhere(const Path& a, const Path& b, Point allowed, double scale) {
  for (const auto& s1 : a)
    for (const auto& s2 : b)
      for (const auto& pt : segment_intersections(s1, s2, kGeomTol * scale))
        if (distance(pt, allowed) > 1e-7 * scale) return true;
  return false;
}

Wedge assemble(int n, const Path& groove_path, GrooveProfile profile) {
  Wedge w;
  w.config = vertex_chain(n);
  w.groove = std::move(profile);
  w.groove_path = drop_degenerate(groove_path);
  const auto& cfg = w.config;
  const Isometry rot_p = cfg.rot_p();
  const Isometry rot_q = cfg.rot_q();

  w.groove_end = w.groove_path.empty() ? cfg.q : end_point(w.groove_path.back());
  w.groove_length = distance(w.groove_end, cfg.q);
  w.disk_radius = distance(w.groove_end, cfg.p);
  w.rho_p = Arc{cfg.p, w.disk_radius, angle_of(w.groove_end - cfg.p), cfg.alpha};

  // Base unit: groove out, boundary arc, groove back in at rot_p(q).
  Path base = w.groove_path;
  base.push_back(w.rho_p);
  append(base, reversed(transformed(w.groove_path, rot_p)));

  w.eta = reversed(w.groove_path);
  const int m = (n - 1) / 2;
  const Isometry step = compose(rot_q, rot_p);
  Isometry g = rot_q;
  for (int j = 0; j < m; ++j) {
    append(w.eta, transformed(base, g));
    g = compose(step, g);
  }

  std::vector<PathSegment> segs;
  segs.push_back(w.rho_p);
  append(segs, transformed(w.eta, rot_p));
  append(segs, reversed(w.eta));
  w.boundary = Contour(std::move(segs));
  return w;
}

std::pair<std::size_t, double> normalize_position(const Contour& c, std::pair<std::size_t, double> pos) {
  if (pos.second >= 1.0 - 1e-12) return {(pos.first + 1) % c.size(), 0.0};
  return {pos.first, std::max(0.0, pos.second)};
}

PathSegment piece(const PathSegment& s, double u0, double u1) {
  if (const auto* a = std::get_if<Arc>(&s))
    return Arc{a->center, a->radius, wrap_angle(a->start_angle + u0 * a->sweep), (u1 - u0) * a->sweep};
  return Line{point_at(s, u0), point_at(s, u1)};
}

std::vector<PathSegment> walk(const Contour& c, std::pair<std::size_t, double> from,
                              std::pair<std::size_t, double> to, double min_len) {
  std::vector<PathSegment> out;
  auto push = [&](const PathSegment& s) {
    if (length(s) > min_len) out.push_back(s);
  };
  const std::size_t n = c.size();
  if (from.first == to.first && from.second < to.second) {
    push(piece(c[from.first], from.second, to.second));
    return out;
  }
  push(piece(c[from.first], from.second, 1.0));
  for (std::size_t j = (from.first + 1) % n; j != to.first; j = (j + 1) % n) push(c[j]);
  push(piece(c[to.first], 0.0, to.second));
  return out;
}

}  // namespace

VertexConfiguration vertex_chain(int n) {
  require_odd_n(n);
  VertexConfiguration cfg;
  cfg.n = n;
  cfg.alpha = kPi / n;
  const Isometry rot_p = cfg.rot_p();
  const Isometry step = compose(cfg.rot_q(), rot_p);
  const int m = (n - 1) / 2;
  Point w = cfg.q;
  for (int j = 0; j <= m; ++j) {
    cfg.chain.push_back(w);
    cfg.mirror_chain.push_back(rot_p(w));
    w = step(w);
  }
  cfg.chain.back() = cfg.p;  // closes exactly; the computed value agrees to rounding
  const double h = std::sin(cfg.alpha) / (std::cos(cfg.alpha) + 1.0);
  cfg.c_plus = {0.0, h};
  cfg.c_minus = {0.0, -h};
  cfg.chain_radius = 1.0 / std::cos(cfg.alpha / 2.0);
  return cfg;
}

bool CriticalLocus::admissible(Point endpoint) const {
  const Point q{1.0, 0.0};
  const Point p{-1.0, 0.0};
  const Point d = endpoint - q;
  if (norm(d) <= kAlgebraTol) return true;  // zero-length groove
  return std::abs(angle_of(d)) < ray_angle && distance(endpoint, p) < R;
}

CriticalLocus critical_locus(int n) {
  require_odd_n(n);
  CriticalLocus loc;
  loc.n = n;
  loc.ray_angle = kPi / (2.0 * n);
  loc.R = 2.0 * std::sqrt(5.0 - 4.0 * std::cos(kPi / n));
  loc.t_max_symmetric = loc.R - 2.0;
  return loc;
}

namespace detail {

bool fan_is_clean(const Path& path, Point center, double angle, int count, double scale) {
  for (int d = 1; d < count; ++d) {
    const Path rotated = transformed(path, Isometry::rotation(center, d * angle));
    if (paths_meet_elsewhere(path, rotated, center, scale)) return false;
  }
  return true;
}

Wedge build_wedge_unchecked(int n, double groove_length) {
  require_odd_n(n);
  Path groove;
  if (groove_length > 0.0) groove.push_back(Line{{1.0, 0.0}, {1.0 + groove_length, 0.0}});
  const double t_max = critical_locus(n).t_max_symmetric;
  return assemble(n, groove, SymmetricGroove{groove_length / t_max});
}

}  // namespace detail

Wedge build_symmetric_wedge(int n, double t_normalized) {
  require_odd_n(n);
  if (!(t_normalized >= 0.0 && t_normalized < 1.0))
    throw Error(ErrorCode::GrooveOutOfRange, "normalized groove length must lie in [0, 1)");
  const double t_max = critical_locus(n).t_max_symmetric;
  Wedge w = detail::build_wedge_unchecked(n, t_normalized * t_max);
  w.groove = SymmetricGroove{t_normalized};
  if (const auto s = contour_is_simple(w.boundary); !s.simple)
    throw Error(ErrorCode::SelfIntersection, "wedge boundary is not simple");
  return w;
}

Wedge build_asymmetric_wedge(int n, const CustomGroove& groove) {
  require_odd_n(n);
  const auto loc = critical_locus(n);
  const Path path = drop_degenerate(groove.path);
  const Point q{1.0, 0.0};
  if (!path.empty()) {
    if (distance(start_point(path.front()), q) > 1e-9)
      throw Error(ErrorCode::InadmissibleEndpoint, "groove path must start at q");
    for (std::size_t i = 1; i < path.size(); ++i)
      if (distance(end_point(path[i - 1]), start_point(path[i])) > 1e-9)
        throw Error(ErrorCode::PathCollision, "groove path is not connected");
  }
  const Point end = path.empty() ? q : end_point(path.back());
  if (!loc.admissible(end))
    throw Error(ErrorCode::InadmissibleEndpoint, "groove endpoint lies outside the admissible region");
  if (!path.empty() && !path_is_simple(path).simple)
    throw Error(ErrorCode::PathCollision, "groove path intersects itself");

  Wedge w = assemble(n, path, groove);
  const double scale = w.boundary.diameter();
  if (!contour_is_simple(w.boundary).simple)
    throw Error(ErrorCode::PathCollision, "an image of the groove meets another edge");
  for (const auto& s : w.eta)
    if (max_distance_to(s, w.config.p) > w.disk_radius * (1.0 + kGeomTol))
      throw Error(ErrorCode::PathCollision, "the side path leaves the disk");
  if (!detail::fan_is_clean(w.eta, w.config.p, w.config.alpha, 2 * n, scale))
    throw Error(ErrorCode::PathCollision, "rotated copies of the wedge overlap");
  return w;
}

bool radially_generated_about(const Contour& contour, Point center, double angle) {
  const Contour c = normalized(contour);
  const std::size_t n = c.size();
  if (n < 2) return false;
  const double scale = c.diameter();
  const double tol = kGeomTol * std::max(scale, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto* arc = std::get_if<Arc>(&c[i]);
    if (!arc || distance(arc->center, center) > tol || std::abs(arc->sweep - angle) > kGeomTol)
      continue;
    Path rest;
    for (std::size_t j = 1; j < n; ++j) rest.push_back(c[(i + j) % n]);
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (distance(start_point(rest[k]), center) > tol) continue;
      const Path x(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k));
      const Path y(rest.begin() + static_cast<std::ptrdiff_t>(k), rest.end());
      const Path image = transformed(reversed(y), Isometry::rotation(center, angle));
      if (std::abs(path_length(x) - path_length(image)) > tol) continue;
      const int samples = 64 * static_cast<int>(x.size() + y.size());
      bool match = true;
      for (int s = 0; s <= samples && match; ++s) {
        const double u = double(s) / samples;
        match = distance(path_point_at(x, u), path_point_at(image, u)) <= tol;
      }
      if (match) return true;
    }
  }
  return false;
}

RadialGenerationReport verify_radial_generation(const Wedge& w) {
  return {radially_generated_about(w.boundary, w.config.p, w.config.alpha),
          radially_generated_about(w.boundary, w.config.q, w.config.alpha)};
}

std::pair<Contour, Contour> split_contour(const Contour& c, std::pair<std::size_t, double> a,
                                          std::pair<std::size_t, double> b) {
  a = normalize_position(c, a);
  b = normalize_position(c, b);
  const double min_len = kAlgebraTol * c.diameter();
  const Point pa = point_at(c[a.first], a.second);
  const Point pb = point_at(c[b.first], b.second);
  auto first = walk(c, a, b, min_len);
  auto second = walk(c, b, a, min_len);
  if (distance(pa, pb) > kGeomTol * c.diameter()) {
    first.push_back(Line{pb, pa});
    second.push_back(Line{pa, pb});
  }
  return {Contour(std::move(first)), Contour(std::move(second))};
}

std::pair<Contour, Contour> split_wedge_symmetric(const Wedge& w) {
  const Contour& c = w.boundary;
  const double scale = c.diameter();
  const double tol = kGeomTol * scale;
  const auto mirror = Isometry::reflection({0.0, 0.0}, kPi / 2);
  if (!same_contour(apply_isometry(mirror, c), c, 10 * tol))
    throw Error(ErrorCode::NotSymmetric, "wedge is not symmetric about its bisector");

  const auto [lo, hi] = c.bounds();
  const PathSegment axis = Line{{0.0, lo.y - 1.0}, {0.0, hi.y + 1.0}};
  const std::size_t n = c.size();
  for (std::size_t apex = 0; apex < n; ++apex) {
    const Point a = start_point(c[apex]);
    if (std::abs(a.x) > tol) continue;
    struct Crossing {
      std::size_t index;
      double u;
      Point pt;
    };
    std::vector<Crossing> crossings;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == apex || j == (apex + n - 1) % n) continue;
      for (const auto& pt : segment_intersections(c[j], axis, tol))
        crossings.push_back({j, project(c[j], pt), pt});
    }
    std::sort(crossings.begin(), crossings.end(), [&](const Crossing& x, const Crossing& y) {
      return distance(x.pt, a) < distance(y.pt, a);
    });
    for (const auto& x : crossings) {
      const bool pinch = distance(x.pt, a) <= 1e-7 * scale;
      if (!pinch && point_location(0.5 * (a + x.pt), c) != Location::Inside) continue;
      auto halves = split_contour(c, {apex, 0.0}, {x.index, x.u});
      if (approximate_centroid(halves.first).x < 0.0) std::swap(halves.first, halves.second);
      return halves;
    }
  }
  throw Error(ErrorCode::NotSymmetric, "no cut along the symmetry axis was found");
}

std::vector<Contour> subdivide_wedge(const Wedge& w, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
  if (k == 1) return {w.boundary};
  const int n = w.config.n;
  const double step = kPi / (n * k);
  const double scale = w.boundary.diameter();
  const Point p = w.config.p;
  if (!detail::fan_is_clean(w.eta, p, step, k + 1, scale))
    throw Error(ErrorCode::SubdivisionCollision, "rotated side paths collide; groove too long for k");
  const PathSegment rho = w.rho_p;
  for (int d = 1; d < k; ++d) {
    const auto g = Isometry::rotation(p, d * step);
    if (paths_meet_elsewhere(transformed(w.eta, g), {rho}, g(w.groove_end), scale))
      throw Error(ErrorCode::SubdivisionCollision, "rotated side path leaves the wedge");
  }
  const auto rot = Isometry::rotation(p, step);
  std::vector<PathSegment> segs;
  segs.push_back(Arc{p, w.disk_radius, w.rho_p.start_angle, step});
  append(segs, transformed(w.eta, rot));
  append(segs, reversed(w.eta));
  const Contour base(std::move(segs));
  std::vector<Contour> out;
  for (int j = 0; j < k; ++j) out.push_back(apply_isometry(power(rot, j), base));
  return out;
}

}  // namespace monodisk

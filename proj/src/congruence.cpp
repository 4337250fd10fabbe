#include <algorithm>
#include <limits>

#include "monodisk/geometry.hpp"

namespace monodisk {

namespace {

bool mergeable(const PathSegment& s1, const PathSegment& s2, double tol) {
  const auto* l1 = std::get_if<Line>(&s1);
  const auto* l2 = std::get_if<Line>(&s2);
  if (l1 && l2) {
    const Point d1 = l1->b - l1->a;
    const Point d2 = l2->b - l2->a;
    return dot(d1, d2) > 0.0 && std::abs(cross(d1, d2)) <= kGeomTol * norm(d1) * norm(d2);
  }
  const auto* a1 = std::get_if<Arc>(&s1);
  const auto* a2 = std::get_if<Arc>(&s2);
  if (a1 && a2) {
    return distance(a1->center, a2->center) <= tol && std::abs(a1->radius - a2->radius) <= tol &&
           (a1->sweep > 0) == (a2->sweep > 0) && std::abs(a1->sweep + a2->sweep) < kTwoPi;
  }
  return false;
}

PathSegment merge(const PathSegment& s1, const PathSegment& s2) {
  if (const auto* l1 = std::get_if<Line>(&s1)) return Line{l1->a, std::get<Line>(s2).b};
  const auto& a1 = std::get<Arc>(s1);
  const auto& a2 = std::get<Arc>(s2);
  return Arc{a1.center, a1.radius, a1.start_angle, a1.sweep + a2.sweep};
}

// Angle turned by the direction of travel at the junction after segment a.
double turn_between(const PathSegment& a, const PathSegment& b) {
  const Point ta = tangent_at(a, 1.0);
  const Point tb = tangent_at(b, 0.0);
  return std::atan2(cross(ta, tb), dot(ta, tb));
}

struct Feature {
  int kind = 0;
  double length = 0.0;
  double radius = 0.0;
  int sweep_sign = 0;
  double turn = 0.0;
};

std::vector<Feature> features(const Contour& c) {
  std::vector<Feature> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = c[i];
    Feature f;
    f.kind = is_arc(s) ? 1 : 0;
    f.length = length(s);
    if (const auto* a = std::get_if<Arc>(&s)) {
      f.radius = a->radius;
      f.sweep_sign = a->sweep > 0 ? 1 : -1;
    }
    f.turn = turn_between(s, c[(i + 1) % n]);
    out.push_back(f);
  }
  return out;
}

bool features_match(const std::vector<Feature>& f1, const std::vector<Feature>& f2,
                    std::size_t shift, double len_tol) {
  const std::size_t n = f1.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Feature& a = f1[i];
    const Feature& b = f2[(i + shift) % n];
    if (a.kind != b.kind || a.sweep_sign != b.sweep_sign) return false;
    if (std::abs(a.length - b.length) > len_tol || std::abs(a.radius - b.radius) > len_tol)
      return false;
    if (std::abs(wrap_angle(a.turn - b.turn)) > 1e-6) return false;
  }
  return true;
}

std::vector<Point> alignment_points(const Contour& c, std::size_t shift) {
  std::vector<Point> pts;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = c[(i + shift) % n];
    pts.push_back(start_point(s));
    pts.push_back(point_at(s, 0.5));
  }
  return pts;
}

// Orientation-preserving best fit mapping xs onto ys.
Isometry procrustes(const std::vector<Point>& xs, const std::vector<Point>& ys) {
  Point cx{}, cy{};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cx = cx + xs[i];
    cy = cy + ys[i];
  }
  cx = cx / double(xs.size());
  cy = cy / double(ys.size());
  double sc = 0.0, sd = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sc += cross(xs[i] - cx, ys[i] - cy);
    sd += dot(xs[i] - cx, ys[i] - cy);
  }
  const double theta = std::atan2(sc, sd);
  return compose(Isometry::translation(cy),
                 compose(Isometry::rotation({}, theta), Isometry::translation(-cx)));
}

std::vector<std::array<std::int64_t, 5>> quantize(const std::vector<Feature>& fs, double quantum) {
  std::vector<std::array<std::int64_t, 5>> out;
  for (const auto& f : fs) {
    out.push_back({f.kind, std::llround(f.length / quantum), std::llround(f.radius / quantum),
                   f.sweep_sign, std::llround(f.turn / kSignatureQuantum)});
  }
  return out;
}

std::vector<std::array<std::int64_t, 5>> min_rotation(std::vector<std::array<std::int64_t, 5>> v) {
  auto best = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    if (v < best) best = v;
  }
  return best;
}

const Isometry& x_axis_mirror() {
  static const Isometry m = Isometry::reflection({}, 0.0);
  return m;
}

}  // namespace

Contour normalized(const Contour& c) {
  if (c.empty()) return c;
  const double scale = std::max(c.diameter(), 1e-300);
  const double tol = kGeomTol * scale;
  std::vector<PathSegment> segs;
  for (const auto& s : c.segments())
    if (length(s) > kAlgebraTol * scale) segs.push_back(s);

  std::vector<PathSegment> merged;
  for (const auto& s : segs) {
    if (!merged.empty() && mergeable(merged.back(), s, tol)) merged.back() = merge(merged.back(), s);
    else merged.push_back(s);
  }
  while (merged.size() > 1 && mergeable(merged.back(), merged.front(), tol)) {
    merged.front() = merge(merged.back(), merged.front());
    merged.pop_back();
  }
  Contour out(std::move(merged));
  if (out.is_closed(1e-6) && contour_area(Contour(out.segments())) < 0.0) out = reversed(out);
  return out;
}

ContourSignature contour_signature(const Contour& c) {
  const Contour a = normalized(c);
  const Contour b = normalized(apply_isometry(x_axis_mirror(), a));
  ContourSignature sig;
  const double diam = a.diameter();
  sig.diameter = std::llround(diam / kSignatureQuantum);
  const double quantum = kSignatureQuantum * std::max(diam, 1e-300);
  auto ea = min_rotation(quantize(features(a), quantum));
  auto eb = min_rotation(quantize(features(b), quantum));
  sig.elements = std::min(ea, eb);
  return sig;
}

CongruenceResult congruent(const Contour& c1, const Contour& c2) {
  const Contour a = normalized(c1);
  const Contour b = normalized(c2);
  CongruenceResult result;
  result.residual = std::numeric_limits<double>::infinity();
  if (a.size() != b.size() || a.empty()) return result;
  const double scale = std::max(a.diameter(), b.diameter());
  const double len_tol = kSignatureQuantum * scale;
  const auto fa = features(a);
  const auto pa = alignment_points(a, 0);

  for (int mirrored = 0; mirrored < 2; ++mirrored) {
    const Contour target = mirrored ? normalized(apply_isometry(x_axis_mirror(), b)) : b;
    const auto ft = features(target);
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
      if (!features_match(fa, ft, shift, len_tol)) continue;
      const auto pt = alignment_points(target, shift);
      const Isometry h = procrustes(pa, pt);
      double residual = 0.0;
      for (std::size_t i = 0; i < pa.size(); ++i)
        residual = std::max(residual, distance(h(pa[i]), pt[i]));
      if (residual < result.residual) {
        result.residual = residual;
        result.witness = mirrored ? compose(x_axis_mirror(), h) : h;
      }
      if (residual < kSignatureQuantum * scale) {
        result.congruent = true;
        return result;
      }
    }
  }
  result.witness.reset();
  return result;
}

bool same_contour(const Contour& c1, const Contour& c2, double tol) {
  auto covered = [tol](const Contour& from, const Contour& onto) {
    for (const auto& s : from.segments())
      for (int i = 0; i < 8; ++i)
        if (distance_to(onto, point_at(s, i / 8.0)) > tol) return false;
    return true;
  };
  return covered(c1, c2) && covered(c2, c1);
}

}  // namespace monodisk

#pragma once

// Planar primitives: points, rigid motions, line/arc segments and closed
// contours built from them.
//
// All arithmetic is binary64. Three tolerance bands are used throughout:
// kGeomTol (relative, geometric equality), kAlgebraTol (identities that are
// exact up to rounding) and kSignatureQuantum (hashing of signatures). Where
// a tolerance is "relative" it is multiplied by the scale of the objects
// involved, normally the contour diameter.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace monodisk {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kGeomTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kSignatureQuantum = 1e-7;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double angle_of(Point v) { return std::atan2(v.y, v.x); }
inline Point polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}
inline Point perp(Point v) { return {-v.y, v.x}; }
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// A distance-preserving map of the plane, stored as an orthogonal 2x2
/// linear part plus a translation. The kind tag records how it was made.
class Isometry {
 public:
  enum class Kind { Identity, Rotation, Translation, Reflection, Composition };

  static Isometry identity();
  /// Counterclockwise rotation by `angle` about `center`.
  static Isometry rotation(Point center, double angle);
  static Isometry translation(Point offset);
  /// Reflection across the line through `on_axis` with direction `axis_angle`.
  static Isometry reflection(Point on_axis, double axis_angle);
  /// Builds from raw parts; the linear part must be orthogonal.
  static Isometry from_parts(double m00, double m01, double m10, double m11,
                             Point offset, Kind kind = Kind::Composition);

  Point operator()(Point pt) const;
  Point apply_linear(Point v) const;

  Isometry inverse() const;
  bool reverses_orientation() const { return determinant() < 0.0; }
  double determinant() const { return m00_ * m11_ - m01_ * m10_; }
  Kind kind() const { return kind_; }
  Point offset() const { return offset_; }
  /// Rotation angle of the linear part (for reflections, of the linear part
  /// composed with y -> -y).
  double linear_angle() const { return std::atan2(m10_, m00_); }

  double m00() const { return m00_; }
  double m01() const { return m01_; }
  double m10() const { return m10_; }
  double m11() const { return m11_; }

  /// outer ∘ inner
  friend Isometry compose(const Isometry& outer, const Isometry& inner);

 private:
  Isometry(double m00, double m01, double m10, double m11, Point offset, Kind kind)
      : m00_(m00), m01_(m01), m10_(m10), m11_(m11), offset_(offset), kind_(kind) {}

  double m00_ = 1.0, m01_ = 0.0, m10_ = 0.0, m11_ = 1.0;
  Point offset_{};
  Kind kind_ = Kind::Identity;
};

/// g^power for power >= 0.
Isometry power(const Isometry& g, int power);

struct Line {
  Point a;
  Point b;
};

/// Circular arc. Positive sweep runs counterclockwise; 0 < |sweep| < 2*pi.
struct Arc {
  Point center;
  double radius = 1.0;
  double start_angle = 0.0;
  double sweep = 0.0;
};

using PathSegment = std::variant<Line, Arc>;
/// An open chain of segments, each starting where the previous one ends.
using Path = std::vector<PathSegment>;

inline bool is_arc(const PathSegment& s) { return std::holds_alternative<Arc>(s); }

Point arc_point(const Arc& arc, double angle);
Point start_point(const PathSegment& s);
Point end_point(const PathSegment& s);
/// Point at parameter u in [0, 1] (linear in arc length).
Point point_at(const PathSegment& s, double u);
/// Unit tangent in the direction of traversal at parameter u.
Point tangent_at(const PathSegment& s, double u);
double length(const PathSegment& s);
PathSegment reversed(const PathSegment& s);
PathSegment transformed(const PathSegment& s, const Isometry& g);
/// Uniform scaling about the origin. Not an isometry; used for normalization.
PathSegment scaled(const PathSegment& s, double factor);
/// Splits at parameter u into [0,u] and [u,1].
std::pair<PathSegment, PathSegment> split_at(const PathSegment& s, double u);
/// Parameter of the point on the segment nearest to pt, clamped to [0, 1].
double project(const PathSegment& s, Point pt);
double distance_to(const PathSegment& s, Point pt);
/// Largest distance from pt to any point of the segment.
double max_distance_to(const PathSegment& s, Point pt);
/// Angular parameter of a point on the arc's circle, relative to the arc,
/// chosen closest to [0, 1].
double arc_parameter(const Arc& arc, Point pt);

Path reversed(const Path& path);
Path transformed(const Path& path, const Isometry& g);
double path_length(const Path& path);
/// Point at arc-length fraction u in [0, 1] along a path.
Point path_point_at(const Path& path, double u);

/// Closed boundary made of segments. Immutable once built.
class Contour {
 public:
  Contour() = default;
  explicit Contour(std::vector<PathSegment> segments) : segments_(std::move(segments)) {}

  const std::vector<PathSegment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  const PathSegment& operator[](std::size_t i) const { return segments_[i]; }

  /// Each segment ends where the next begins (cyclically) within tol * scale.
  bool is_closed(double rel_tol = kGeomTol) const;
  /// Maximum distance between two boundary points (sampled; arcs densely).
  double diameter() const;
  /// Axis-aligned bounds: {min, max}.
  std::pair<Point, Point> bounds() const;
  /// Vertices: the start point of every segment.
  std::vector<Point> vertices() const;

 private:
  std::vector<PathSegment> segments_;
};

Contour reversed(const Contour& c);
Contour apply_isometry(const Isometry& g, const Contour& c);
Contour scaled(const Contour& c, double factor);

/// Signed area by the line-integral formula; positive when counterclockwise.
/// Throws Error(NotClosed) when the closure invariant fails.
double contour_area(const Contour& c);

/// Area centroid of a polygonal approximation (arcs flattened at a fixed
/// resolution). Equivariant under isometries up to rounding.
Point approximate_centroid(const Contour& c);

/// Every intersection point of two segments. A tangential touch is reported
/// once; overlapping collinear or co-circular pieces report the endpoints of
/// the overlap. `tol` is absolute.
std::vector<Point> segment_intersections(const PathSegment& s1, const PathSegment& s2,
                                         double tol);
/// Same, with tol = kGeomTol times the combined extent of the segments.
std::vector<Point> segment_intersections(const PathSegment& s1, const PathSegment& s2);

struct SimplicityResult {
  bool simple = true;
  std::optional<Point> violation;
  explicit operator bool() const { return simple; }
};

/// True iff no two non-adjacent segments meet and adjacent ones meet only
/// at their shared endpoint. Tangential touches count as meeting.
SimplicityResult contour_is_simple(const Contour& c);

/// Whether the open path has a self-intersection other than at consecutive
/// junctions.
SimplicityResult path_is_simple(const Path& path);

enum class Location { Inside, Boundary, Outside };

/// Winding number of the contour around pt (pt must be off the boundary).
int winding_number(Point pt, const Contour& c);
double distance_to(const Contour& c, Point pt);
/// Classification with a boundary band of `band` (absolute). A negative band
/// selects kGeomTol * diameter.
Location point_location(Point pt, const Contour& c, double band = -1.0);

/// Reparametrization-free canonical form of a contour: merged collinear
/// lines and co-circular arcs, counterclockwise traversal.
Contour normalized(const Contour& c);

/// Rotation/translation/reflection invariant signature, quantized for
/// hashing and equality.
struct ContourSignature {
  std::int64_t diameter = 0;
  /// Per segment: kind, length, radius, sweep sign, turn at its end.
  std::vector<std::array<std::int64_t, 5>> elements;
  friend bool operator==(const ContourSignature&, const ContourSignature&) = default;
};

ContourSignature contour_signature(const Contour& c);

struct CongruenceResult {
  bool congruent = false;
  /// Maps the first contour onto the second when congruent.
  std::optional<Isometry> witness;
  /// Max deviation of the aligned vertices and segment midpoints.
  double residual = 0.0;
  explicit operator bool() const { return congruent; }
};

/// Congruence including orientation-reversing isometries.
CongruenceResult congruent(const Contour& c1, const Contour& c2);

/// Same point set (up to traversal start), within tol (absolute).
bool same_contour(const Contour& c1, const Contour& c2, double tol);

}  // namespace monodisk

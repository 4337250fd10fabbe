#pragma once

// Wedge tiles: tiles whose boundary is generated by rotating a side path
// about each of two vertices p and q. Everything here works in canonical
// coordinates p = (-1, 0), q = (1, 0); the rotation angle at both vertices
// is pi/n for odd n >= 3.

#include <utility>
#include <variant>
#include <vector>

#include "monodisk/geometry.hpp"

namespace monodisk {

/// The orbit of q under alternating rotations about p and q.
struct VertexConfiguration {
  int n = 3;
  Point p{-1.0, 0.0};
  Point q{1.0, 0.0};
  double alpha = kPi / 3;
  /// w_0 = q, w_{j+1} = rot_q(rot_p(w_j)), ending at w_m = p with m = (n-1)/2.
  std::vector<Point> chain;
  /// rot_p(w_j) for each chain point.
  std::vector<Point> mirror_chain;
  /// (0, +-sin(alpha)/(cos(alpha)+1)): the fixed points of the two composed
  /// rotations, both equidistant from p and q.
  Point c_plus;
  Point c_minus;
  /// Radius of the circles about c_plus / c_minus through q.
  double chain_radius = 0.0;

  Isometry rot_p() const { return Isometry::rotation(p, alpha); }
  Isometry rot_q() const { return Isometry::rotation(q, alpha); }
};

VertexConfiguration vertex_chain(int n);

/// Bounds on where the free end of a groove may sit.
struct CriticalLocus {
  int n = 3;
  /// Half-angle of the cone at q that admissible endpoints must lie in.
  double ray_angle = 0.0;
  /// Largest admissible distance from p: 2 * |1 - 2 e^{i pi/n}|.
  double R = 0.0;
  /// Longest straight groove along the p-q line: R - 2.
  double t_max_symmetric = 0.0;

  /// Strictly inside the cone at q and strictly within R of p.
  bool admissible(Point endpoint) const;
};

CriticalLocus critical_locus(int n);

/// Straight groove along the p-q axis; t is normalized by t_max_symmetric.
struct SymmetricGroove {
  double t = 0.0;
};

/// Arbitrary groove path from q to its free end.
struct CustomGroove {
  Path path;
};

using GrooveProfile = std::variant<SymmetricGroove, CustomGroove>;

struct Wedge {
  VertexConfiguration config;
  GrooveProfile groove;
  /// Groove path from q to its free end (empty for a zero-length groove).
  Path groove_path;
  Point groove_end;
  double groove_length = 0.0;
  /// Radius of the boundary arc about p; equals 2 + groove_length for
  /// grooves along the axis.
  double disk_radius = 2.0;
  /// Side path from the groove end through the chain to p.
  Path eta;
  Arc rho_p;
  /// Counterclockwise: rho_p, rot_p(eta), reverse(eta).
  Contour boundary;
};

/// Throws InvalidN, GrooveOutOfRange (t outside [0, 1)), SelfIntersection.
Wedge build_symmetric_wedge(int n, double t_normalized);

/// Throws InvalidN, InadmissibleEndpoint, PathCollision.
Wedge build_asymmetric_wedge(int n, const CustomGroove& groove);

namespace detail {
/// Straight-groove wedge with an absolute groove length and no validation.
/// Used for the pinch limit and for probing beyond it.
Wedge build_wedge_unchecked(int n, double groove_length);

/// Whether `path` meets its rotations by d * angle about `center`
/// (d = 1 .. count-1) anywhere other than the centre. `scale` sets the
/// tolerances.
bool fan_is_clean(const Path& path, Point center, double angle, int count, double scale);
}  // namespace detail

struct RadialGenerationReport {
  bool about_p = false;
  bool about_q = false;
};

/// Whether the contour contains an arc centred at `center` sweeping `angle`,
/// with the rest of the boundary made of a side path and its rotation by
/// `angle` about `center`.
bool radially_generated_about(const Contour& c, Point center, double angle);

RadialGenerationReport verify_radial_generation(const Wedge& w);

/// Cuts a mirror-symmetric wedge along x = 0. Returns {half containing q,
/// half containing p}. Throws NotSymmetric.
std::pair<Contour, Contour> split_wedge_symmetric(const Wedge& w);

/// k congruent subtiles filling the wedge, ordered counterclockwise about p.
/// Throws InvalidK, SubdivisionCollision.
std::vector<Contour> subdivide_wedge(const Wedge& w, int k);

/// Splits a contour along the chord between two boundary positions (segment
/// index, parameter). Positions may coincide as points (a pinch). Returns the
/// piece traversed from a to b and the piece traversed from b to a.
std::pair<Contour, Contour> split_contour(const Contour& c, std::pair<std::size_t, double> a,
                                          std::pair<std::size_t, double> b);

}  // namespace monodisk

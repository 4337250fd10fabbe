#pragma once

// Complete tilings of a disk by congruent tiles, the constructors for each
// family, and the validator that characterizes any tiling.

#include <cstdint>
#include <string>
#include <vector>

#include "monodisk/geometry.hpp"
#include "monodisk/wedge.hpp"

namespace monodisk {

enum class Orientation { Positive, Negative };

struct Disk {
  Point center;
  double radius = 1.0;
};

struct Tile {
  int id = 0;
  Contour boundary;
  Orientation orientation = Orientation::Positive;
};

/// Which constructor produced a tiling and with what parameters. Unused
/// fields stay at their defaults.
struct FamilyTag {
  std::string family;  // symradial, radgen, radial, D, D31, C, Ctilde
  int n = 0;
  int k = 0;
  double t = 0.0;
  std::string word;
  std::string chirality;  // "A" or "B"
  std::string variant;    // "P" or "Q" for Ctilde
};

struct Tiling {
  Disk disk;
  std::vector<Tile> tiles;
  FamilyTag tag;
};

enum class Chirality { A, B };
enum class Pivot { AboutP, AboutQ };

/// Cyclic word over {L, S} describing the boundary arcs of a C-family member:
/// L spans pi/n, S spans pi/(nk).
struct EdgeWord {
  std::string letters;
  int n = 3;
  int k = 1;

  /// Throws WordInvalid unless letters are L/S and #L*k + #S = 2nk.
  void validate() const;
  int long_count() const;
};

/// Whether two words agree up to cyclic rotation.
bool cyclically_equal(const std::string& a, const std::string& b);

/// n rotated copies of the tile bounded by `side`, its rotation by 2pi/n
/// about side's start, and the arc joining their free ends. Throws InvalidN
/// (n < 2), SideSelfIntersects, RotationOverlap.
Tiling tile_disk_radial(const Path& side, int n);

/// Straight-radius side: n equal sectors.
Tiling build_symradial(int n);
/// S-shaped side of two semicircles; six copies.
Tiling build_radgen();

Tiling build_D(int n, double t_normalized, Chirality chirality);
/// The pinch-limit member: the 3-wedge at the critical groove length, split
/// at its self-touch point.
Tiling build_D31(Chirality chirality);
Tiling build_C(int n, int k, double t_normalized, const EdgeWord& word,
               Chirality chirality = Chirality::A);
Tiling build_Ctilde(int n, int k, const CustomGroove& groove, Pivot pivot, Chirality chirality);

/// Default groove for Ctilde: a two-leg polyline from q with a kink above
/// the axis, ending at q + (length, 0) with length = t * t_max.
CustomGroove default_ctilde_groove(int n, double t_normalized);

/// `count` copies of a tile rotated about `center`, not normalized.
Tiling radial_copies(const Contour& tile, Point center, double radius, int count);

/// Mirror image across the horizontal line through the disk centre;
/// orientation tags swap and chirality flips.
Tiling mirrored(const Tiling& t);

struct ValidationOptions {
  int samples = 10000;
  std::uint64_t seed = 42;
};

struct TilingReport {
  bool valid = false;
  bool monohedral = false;
  int tile_count = 0;
  int center_touch_count = 0;
  int boundary_touch_count = 0;
  int cyclic_symmetry_order = 1;
  bool has_mirror_symmetry = false;
  int samples = 0;
  int uncovered = 0;
  int multiply_covered = 0;
  double area_error = 0.0;
  double max_congruence_residual = 0.0;
  std::vector<std::string> failures;
};

TilingReport validate_tiling(const Tiling& t, const ValidationOptions& options = {});

/// Reads the boundary word of a C-family tiling. Throws NotCFamily,
/// UnrecognizedSpan. With k = 1 both spans coincide and every arc reads S.
EdgeWord edge_word_of(const Tiling& t);

/// Same tiles as point sets, optionally up to a rotation about the centre.
bool same_tiling(const Tiling& a, const Tiling& b, bool allow_rotation);

}  // namespace monodisk

#include "monodisk/families.hpp"

#include <algorithm>

#include "monodisk/error.hpp"

namespace monodisk {

namespace {

struct Placed {
  Contour boundary;
  Orientation orientation;
};

// Moves the disk to the origin and scales it to radius 1.
Tiling normalized_tiling(const std::vector<Placed>& placed, Point center, double radius,
                         FamilyTag tag) {
  Tiling out;
  out.disk = {{0.0, 0.0}, 1.0};
  out.tag = std::move(tag);
  const auto shift = Isometry::translation(-center);
  int id = 0;
  for (const auto& p : placed)
    out.tiles.push_back({id++, scaled(apply_isometry(shift, p.boundary), 1.0 / radius), p.orientation});
  return out;
}

Tiling with_chirality(Tiling t, Chirality c) {
  t.tag.chirality = "A";
  return c == Chirality::A ? t : mirrored(t);
}

Orientation flip(Orientation o) {
  return o == Orientation::Positive ? Orientation::Negative : Orientation::Positive;
}

}  // namespace

void EdgeWord::validate() const {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidN, "n must be an odd integer >= 3");
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
  long shorts = 0, longs = 0;
  for (char ch : letters) {
    if (ch == 'L') ++longs;
    else if (ch == 'S') ++shorts;
    else throw Error(ErrorCode::WordInvalid, std::string("unexpected letter '") + ch + "' in edge word");
  }
  if (longs * k + shorts != 2L * n * k)
    throw Error(ErrorCode::WordInvalid, "edge word '" + letters + "' does not span " +
                                            std::to_string(2 * n * k) + " slots");
}

int EdgeWord::long_count() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'L'));
}

bool cyclically_equal(const std::string& a, const std::string& b) {
  return a.size() == b.size() && (a + a).find(b) != std::string::npos;
}

Tiling tile_disk_radial(const Path& side, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidN, "a radial tiling needs n >= 2 copies");
  if (side.empty()) throw Error(ErrorCode::SideSelfIntersects, "side path is empty");
  const Point center = start_point(side.front());
  const Point end = end_point(side.back());
  const double radius = distance(center, end);
  if (!path_is_simple(side).simple)
    throw Error(ErrorCode::SideSelfIntersects, "side path intersects itself");
  for (const auto& s : side)
    if (max_distance_to(s, center) > radius * (1.0 + kGeomTol))
      throw Error(ErrorCode::RotationOverlap, "side path leaves the disk");
  const double angle = kTwoPi / n;
  if (!detail::fan_is_clean(side, center, angle, n, 2.0 * radius))
    throw Error(ErrorCode::RotationOverlap, "side path meets one of its rotations");

  const auto rot = Isometry::rotation(center, angle);
  std::vector<PathSegment> segs = side;
  segs.push_back(Arc{center, radius, angle_of(end - center), angle});
  const Path back = reversed(transformed(side, rot));
  segs.insert(segs.end(), back.begin(), back.end());
  const Contour base(std::move(segs));
  std::vector<Placed> placed;
  for (int j = 0; j < n; ++j)
    placed.push_back({apply_isometry(Isometry::rotation(center, j * angle), base), Orientation::Positive});
  FamilyTag tag;
  tag.family = "radial";
  tag.n = n;
  return normalized_tiling(placed, center, radius, tag);
}

Tiling build_symradial(int n) {
  Tiling t = tile_disk_radial({Line{{0.0, 0.0}, {1.0, 0.0}}}, n);
  t.tag.family = "symradial";
  return t;
}

Tiling build_radgen() {
  const Path side{Arc{{0.25, 0.0}, 0.25, kPi, -kPi}, Arc{{0.75, 0.0}, 0.25, kPi, kPi}};
  Tiling t = tile_disk_radial(side, 6);
  t.tag.family = "radgen";
  return t;
}

Tiling build_D(int n, double t_normalized, Chirality chirality) {
  const Wedge w = build_symmetric_wedge(n, t_normalized);
  const auto [right, left] = split_wedge_symmetric(w);
  const auto rot = w.config.rot_p();
  std::vector<Placed> placed;
  Isometry g = Isometry::identity();
  for (int j = 0; j < 2 * n; ++j) {
    placed.push_back({apply_isometry(g, right), Orientation::Positive});
    placed.push_back({apply_isometry(g, left), Orientation::Negative});
    g = compose(rot, g);
  }
  FamilyTag tag;
  tag.family = "D";
  tag.n = n;
  tag.t = t_normalized;
  return with_chirality(normalized_tiling(placed, w.config.p, w.disk_radius, tag), chirality);
}

Tiling build_D31(Chirality chirality) {
  const Wedge w = detail::build_wedge_unchecked(3, critical_locus(3).t_max_symmetric);
  const auto [right, left] = split_wedge_symmetric(w);
  const auto rot = w.config.rot_p();
  std::vector<Placed> placed;
  Isometry g = Isometry::identity();
  for (int j = 0; j < 6; ++j) {
    placed.push_back({apply_isometry(g, right), Orientation::Positive});
    placed.push_back({apply_isometry(g, left), Orientation::Negative});
    g = compose(rot, g);
  }
  FamilyTag tag;
  tag.family = "D31";
  tag.n = 3;
  tag.t = 1.0;
  return with_chirality(normalized_tiling(placed, w.config.p, w.disk_radius, tag), chirality);
}

Tiling build_C(int n, int k, double t_normalized, const EdgeWord& word, Chirality chirality) {
  if (word.n != n || word.k != k) throw Error(ErrorCode::WordInvalid, "edge word built for other n, k");
  word.validate();
  const Wedge w = build_symmetric_wedge(n, t_normalized);
  const auto subtiles = subdivide_wedge(w, k);
  const auto axis_mirror = Isometry::reflection({0.0, 0.0}, kPi / 2);
  std::vector<Contour> flipped;
  for (const auto& s : subtiles) flipped.push_back(reversed(apply_isometry(axis_mirror, s)));

  const double slot = kPi / (n * k);
  std::vector<Placed> placed;
  int position = 0;
  for (char letter : word.letters) {
    const auto g = Isometry::rotation(w.config.p, position * slot);
    if (letter == 'S') {
      placed.push_back({apply_isometry(g, subtiles[0]), Orientation::Positive});
      position += 1;
    } else {
      for (const auto& f : flipped) placed.push_back({apply_isometry(g, f), Orientation::Negative});
      position += k;
    }
  }
  FamilyTag tag;
  tag.family = "C";
  tag.n = n;
  tag.k = k;
  tag.t = t_normalized;
  tag.word = word.letters;
  return with_chirality(normalized_tiling(placed, w.config.p, w.disk_radius, tag), chirality);
}

CustomGroove default_ctilde_groove(int n, double t_normalized) {
  const double len = t_normalized * critical_locus(n).t_max_symmetric;
  const Point q{1.0, 0.0};
  const Point kink = q + len * Point{0.5, 0.1};
  const Point end = q + Point{len, 0.0};
  return {{Line{q, kink}, Line{kink, end}}};
}

Tiling build_Ctilde(int n, int k, const CustomGroove& groove, Pivot pivot, Chirality chirality) {
  const Wedge w = build_asymmetric_wedge(n, groove);
  const auto subtiles = subdivide_wedge(w, k);
  std::vector<Placed> placed;
  Point center;
  if (pivot == Pivot::AboutP) {
    center = w.config.p;
    const double slot = kPi / (n * k);
    for (int j = 0; j < 2 * n * k; ++j)
      placed.push_back({apply_isometry(Isometry::rotation(center, j * slot), subtiles[0]),
                        Orientation::Positive});
  } else {
    center = w.config.q;
    const auto rot = w.config.rot_q();
    Isometry g = Isometry::identity();
    for (int j = 0; j < 2 * n; ++j) {
      for (const auto& s : subtiles) placed.push_back({apply_isometry(g, s), Orientation::Positive});
      g = compose(rot, g);
    }
  }
  FamilyTag tag;
  tag.family = "Ctilde";
  tag.n = n;
  tag.k = k;
  tag.t = w.groove_length / critical_locus(n).t_max_symmetric;
  tag.variant = pivot == Pivot::AboutP ? "P" : "Q";
  return with_chirality(normalized_tiling(placed, center, w.disk_radius, tag), chirality);
}

Tiling radial_copies(const Contour& tile, Point center, double radius, int count) {
  Tiling out;
  out.disk = {center, radius};
  out.tag.family = "radial";
  out.tag.n = count;
  const auto rot = Isometry::rotation(center, kTwoPi / count);
  Isometry g = Isometry::identity();
  for (int j = 0; j < count; ++j) {
    out.tiles.push_back({j, apply_isometry(g, tile), Orientation::Positive});
    g = compose(rot, g);
  }
  return out;
}

Tiling mirrored(const Tiling& t) {
  Tiling out = t;
  const auto m = Isometry::reflection(t.disk.center, 0.0);
  for (auto& tile : out.tiles) {
    tile.boundary = reversed(apply_isometry(m, tile.boundary));
    tile.orientation = flip(tile.orientation);
  }
  if (out.tag.chirality.empty() || out.tag.chirality == "A") out.tag.chirality = "B";
  else out.tag.chirality = "A";
  return out;
}

}  // namespace monodisk

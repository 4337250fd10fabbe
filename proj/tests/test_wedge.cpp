#include <complex>

#include "doctest.h"
#include "monodisk/error.hpp"
#include "monodisk/wedge.hpp"

using namespace monodisk;

namespace {

const double kSqrt3 = std::sqrt(3.0);

bool near(Point a, Point b, double tol = 1e-9) { return distance(a, b) <= tol; }

bool has_vertex(const Contour& c, Point v, double tol = 1e-9) {
  for (const auto& x : c.vertices())
    if (near(x, v, tol)) return true;
  return false;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

// Complex-number oracle for the chain: alternate rotations written directly.
std::vector<std::complex<double>> chain_oracle(int n) {
  const std::complex<double> p(-1, 0), q(1, 0);
  const auto e = std::polar(1.0, kPi / n);
  std::vector<std::complex<double>> out{q};
  for (int j = 0; j < (n - 1) / 2; ++j) {
    auto z = p + e * (out.back() - p);
    out.push_back(q + e * (z - q));
  }
  return out;
}

}  // namespace

TEST_CASE("vertex chain") {
  for (int n : {3, 5, 7, 9, 11}) {
    const auto cfg = vertex_chain(n);
    const auto oracle = chain_oracle(n);
    REQUIRE(cfg.chain.size() == oracle.size());
    for (std::size_t j = 0; j < oracle.size(); ++j)
      CHECK(near(cfg.chain[j], {oracle[j].real(), oracle[j].imag()}, 1e-12));
    // Closure, checked against the oracle's own value rather than the stored one.
    CHECK(std::abs(oracle.back() - std::complex<double>(-1, 0)) < 1e-12);
    for (Point c : {cfg.c_plus, cfg.c_minus})
      CHECK(std::abs(distance(c, cfg.p) - distance(c, cfg.q)) < 1e-12);
    // The chain sits on the circle about the lower centre, its mirror image
    // under rot_p on the circle about the upper one; both have radius
    // 1/cos(pi/2n).
    for (Point w : cfg.chain) CHECK(std::abs(distance(w, cfg.c_minus) - cfg.chain_radius) < 1e-12);
    for (Point w : cfg.mirror_chain)
      CHECK(std::abs(distance(w, cfg.c_plus) - cfg.chain_radius) < 1e-12);
    CHECK(cfg.chain_radius == doctest::Approx(1.0 / std::cos(kPi / (2 * n))).epsilon(1e-14));
  }
  const auto c3 = vertex_chain(3);
  CHECK(c3.chain.size() == 2);
  CHECK(near(c3.mirror_chain[0], {0, kSqrt3}, 1e-12));
  CHECK(c3.c_plus.y == doctest::Approx((kSqrt3 / 2) / 1.5).epsilon(1e-14));
  CHECK(vertex_chain(5).c_plus.y == doctest::Approx(std::tan(kPi / 10)).epsilon(1e-14));
  CHECK(code_of([] { vertex_chain(4); }) == ErrorCode::InvalidN);
  CHECK(code_of([] { vertex_chain(1); }) == ErrorCode::InvalidN);
}

TEST_CASE("critical locus") {
  const auto l3 = critical_locus(3);
  CHECK(l3.R == doctest::Approx(2 * kSqrt3).epsilon(1e-14));
  CHECK(std::abs(l3.t_max_symmetric - (2 * kSqrt3 - 2)) < 1e-12);
  CHECK(l3.ray_angle == doctest::Approx(kPi / 6));
  const double ratio = l3.t_max_symmetric / (2 + l3.t_max_symmetric);
  CHECK(ratio == doctest::Approx(1 - 1 / kSqrt3).epsilon(1e-12));
  CHECK(std::abs(ratio - 0.422) < 1e-3);
  // Oracle: 2|1 - 2e^{i pi/n}| - 2 evaluated with complex arithmetic.
  for (int n = 3; n <= 25; n += 2) {
    const double oracle = 2 * std::abs(1.0 - 2.0 * std::polar(1.0, kPi / n)) - 2;
    CHECK(critical_locus(n).t_max_symmetric == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(critical_locus(n).R > 2);
    if (n > 3) CHECK(critical_locus(n).t_max_symmetric < critical_locus(n - 2).t_max_symmetric);
  }
  // Direct evaluation gives 0.656262..; ratio to the radius about 0.2471.
  CHECK(critical_locus(5).t_max_symmetric == doctest::Approx(0.656262).epsilon(1e-6));
  CHECK(critical_locus(5).t_max_symmetric / (2 + critical_locus(5).t_max_symmetric) > 0.22);
  CHECK(l3.admissible({1.5, 0.0}));
  CHECK_FALSE(l3.admissible({1.0 + 2 * kSqrt3 - 2, 0.0}));
  CHECK_FALSE(l3.admissible({1.0 + 0.3 * std::cos(0.6 * kPi), 0.3 * std::sin(0.6 * kPi)}));
  CHECK(code_of([] { critical_locus(6); }) == ErrorCode::InvalidN);
}

TEST_CASE("symmetric 3-wedge at t = 0 is the curved triangle") {
  const auto w = build_symmetric_wedge(3, 0.0);
  CHECK(w.boundary.size() == 3);
  for (Point v : {Point{-1, 0}, Point{1, 0}, Point{0, kSqrt3}}) CHECK(has_vertex(w.boundary, v));
  for (const auto& s : w.boundary.segments()) {
    REQUIRE(is_arc(s));
    CHECK(std::get<Arc>(s).radius == doctest::Approx(2.0));
  }
  REQUIRE(w.eta.size() == 1);
  const auto& eta = std::get<Arc>(w.eta[0]);
  CHECK(near(eta.center, {0, -kSqrt3}));
  CHECK(near(start_point(w.eta[0]), {1, 0}));
  CHECK(near(end_point(w.eta[0]), {-1, 0}));
  CHECK(contour_area(w.boundary) == doctest::Approx(4 * kPi / 6).epsilon(1e-12));
}

TEST_CASE("symmetric wedges: area, simplicity, symmetry, generation") {
  const auto mirror = Isometry::reflection({0, 0}, kPi / 2);
  for (int n : {3, 5, 7, 9, 11}) {
    for (double t : {0.0, 0.3, 0.6, 0.9}) {
      CAPTURE(n);
      CAPTURE(t);
      const auto w = build_symmetric_wedge(n, t);
      const double len = t * critical_locus(n).t_max_symmetric;
      CHECK(w.boundary.is_closed());
      CHECK(contour_is_simple(w.boundary).simple);
      CHECK(w.disk_radius == doctest::Approx(2 + len).epsilon(1e-14));
      const double area = kPi * (2 + len) * (2 + len) / (2 * n);
      CHECK(contour_area(w.boundary) == doctest::Approx(area).epsilon(1e-9));
      CHECK(same_contour(apply_isometry(mirror, w.boundary), w.boundary, 1e-9));
      // The second side is the first rotated about p.
      const Path image = transformed(w.eta, w.config.rot_p());
      const auto& segs = w.boundary.segments();
      const Path second(segs.begin() + 1, segs.begin() + 1 + static_cast<long>(w.eta.size()));
      for (int i = 0; i <= 200; ++i)
        CHECK(near(path_point_at(second, i / 200.0), path_point_at(image, i / 200.0)));
      const auto report = verify_radial_generation(w);
      CHECK(report.about_p);
      CHECK(report.about_q);
      if (t == 0.0) {
        CHECK(w.boundary.size() == static_cast<std::size_t>(n));
      } else {
        // Outer groove legs at q and at p are parallel.
        const Point leg_q = end_point(w.groove_path.front()) - start_point(w.groove_path.front());
        bool found = false;
        for (const auto& s : segs) {
          if (is_arc(s) || !near(end_point(s), w.config.p)) continue;
          const Point leg_p = end_point(s) - start_point(s);
          if (std::abs(cross(leg_p, leg_q)) <= 1e-12 * norm(leg_p) * norm(leg_q)) found = true;
        }
        CHECK(found);
      }
    }
  }
  CHECK(build_symmetric_wedge(5, 0.0).boundary.size() == 5);
}

TEST_CASE("symmetric wedge errors") {
  CHECK(code_of([] { build_symmetric_wedge(4, 0.1); }) == ErrorCode::InvalidN);
  CHECK(code_of([] { build_symmetric_wedge(3, 1.0); }) == ErrorCode::GrooveOutOfRange);
  CHECK(code_of([] { build_symmetric_wedge(3, -0.1); }) == ErrorCode::GrooveOutOfRange);
}

TEST_CASE("beyond the critical length the boundary self-intersects") {
  const double t_max = critical_locus(3).t_max_symmetric;
  CHECK_FALSE(contour_is_simple(detail::build_wedge_unchecked(3, 1.05 * t_max).boundary).simple);
  // At the limit itself the boundary touches itself at the apex.
  const auto pinch = detail::build_wedge_unchecked(3, t_max);
  const auto r = contour_is_simple(pinch.boundary);
  CHECK_FALSE(r.simple);
  REQUIRE(r.violation.has_value());
  CHECK(near(*r.violation, {0, kSqrt3}, 1e-6));
}

TEST_CASE("asymmetric wedges") {
  const double t_max = critical_locus(3).t_max_symmetric;
  const double len = 0.3 * t_max;
  const auto straight = build_asymmetric_wedge(3, {{Line{{1, 0}, {1 + len, 0}}}});
  const auto sym = build_symmetric_wedge(3, 0.3);
  CHECK(same_contour(straight.boundary, sym.boundary, 1e-9));

  const Path poly{Line{{1, 0}, {1.1, 0.1}}, Line{{1.1, 0.1}, {1.2, 0}}};
  const auto w = build_asymmetric_wedge(3, {poly});
  CHECK(contour_is_simple(w.boundary).simple);
  CHECK(contour_area(w.boundary) == doctest::Approx(kPi * 2.2 * 2.2 / 6).epsilon(1e-9));
  const auto report = verify_radial_generation(w);
  CHECK(report.about_p);
  CHECK(report.about_q);

  const Point bad_end{1 + 0.3 * std::cos(0.6 * kPi), 0.3 * std::sin(0.6 * kPi)};
  CHECK(code_of([&] { build_asymmetric_wedge(3, {{Line{{1, 0}, bad_end}}}); }) ==
        ErrorCode::InadmissibleEndpoint);
  // Admissible endpoint, but the path swings far outside and hits its images.
  const Path loop{Line{{1, 0}, {1, 1.5}}, Line{{1, 1.5}, {1.3, 0.0}}};
  CHECK(code_of([&] { build_asymmetric_wedge(3, {loop}); }) == ErrorCode::PathCollision);
}

TEST_CASE("radial generation checks") {
  // Sector of angle pi/3 with apex at the origin.
  const Point a{2, 0}, b = polar(2, kPi / 3);
  const Contour sector({Line{{0, 0}, a}, Arc{{0, 0}, 2, 0, kPi / 3}, Line{b, {0, 0}}});
  CHECK(radially_generated_about(sector, {0, 0}, kPi / 3));
  CHECK_FALSE(radially_generated_about(sector, a, kPi / 3));
  CHECK_FALSE(radially_generated_about(sector, b, kPi / 3));

  const auto tri = build_symmetric_wedge(3, 0.0);
  std::vector<PathSegment> segs = tri.boundary.segments();
  segs.back() = Line{start_point(segs.back()), end_point(segs.back())};
  Wedge broken = tri;
  broken.boundary = Contour(segs);
  const auto r = verify_radial_generation(broken);
  CHECK_FALSE(r.about_p);
  CHECK_FALSE(r.about_q);
}

TEST_CASE("splitting along the symmetry axis") {
  {
    const auto w = build_symmetric_wedge(3, 0.0);
    const auto [right, left] = split_wedge_symmetric(w);
    for (const auto& h : {right, left}) {
      CHECK(h.is_closed());
      CHECK(contour_is_simple(h).simple);
      CHECK(has_vertex(h, {0, kSqrt3}));
      // The cut ends where the bottom arc (centre (0,-sqrt3), radius 2) crosses x = 0.
      CHECK(has_vertex(h, {0, 2 - kSqrt3}));
      CHECK(contour_area(h) == doctest::Approx(kPi * 4 / 12).epsilon(1e-9));
    }
    CHECK(has_vertex(right, {1, 0}));
    CHECK(has_vertex(left, {-1, 0}));
    const auto c = congruent(right, left);
    CHECK(c.congruent);
    CHECK(c.witness->reverses_orientation());
  }
  {
    const auto w = build_symmetric_wedge(5, 0.0);
    const auto [right, left] = split_wedge_symmetric(w);
    CHECK(contour_area(right) == doctest::Approx(kPi * 4 / 20).epsilon(1e-9));
    CHECK(contour_area(left) == doctest::Approx(kPi * 4 / 20).epsilon(1e-9));
    CHECK(congruent(right, left).congruent);
  }
  {
    const auto w = build_symmetric_wedge(3, 0.5);
    const auto [right, left] = split_wedge_symmetric(w);
    CHECK(congruent(right, left).congruent);
    const Point apex = w.config.mirror_chain[0];
    for (const auto& h : {right, left}) {
      CHECK(contour_is_simple(h).simple);
      int legs = 0;
      for (const auto& s : h.segments()) {
        if (is_arc(s)) continue;
        const bool touches = near(start_point(s), apex) || near(end_point(s), apex);
        const bool on_axis = std::abs(start_point(s).x) < 1e-9 && std::abs(end_point(s).x) < 1e-9;
        if (touches && !on_axis) ++legs;
      }
      CHECK(legs == 1);
    }
  }
  for (int n : {7, 9}) {
    for (double t : {0.0, 0.3, 0.8}) {
      const auto [right, left] = split_wedge_symmetric(build_symmetric_wedge(n, t));
      CHECK(congruent(right, left).congruent);
      CHECK(contour_is_simple(right).simple);
    }
  }
  const auto asym = build_asymmetric_wedge(3, {{Line{{1, 0}, {1.1, 0.1}}, Line{{1.1, 0.1}, {1.2, 0}}}});
  CHECK(code_of([&] { split_wedge_symmetric(asym); }) == ErrorCode::NotSymmetric);
}

TEST_CASE("subdividing a wedge") {
  const auto w = build_symmetric_wedge(3, 0.0);
  const auto one = subdivide_wedge(w, 1);
  REQUIRE(one.size() == 1);
  CHECK(same_contour(one[0], w.boundary, 1e-12));

  const auto two = subdivide_wedge(w, 2);
  REQUIRE(two.size() == 2);
  for (const auto& s : two) CHECK(contour_area(s) == doctest::Approx(kPi * 4 / 12).epsilon(1e-9));
  CHECK(congruent(two[0], two[1]).congruent);

  for (int n : {3, 5, 7}) {
    for (double t : {0.0, 0.3}) {
      for (int k : {2, 3}) {
        const auto wedge = build_symmetric_wedge(n, t);
        const auto subs = subdivide_wedge(wedge, k);
        double total = 0;
        for (const auto& s : subs) {
          CHECK(contour_is_simple(s).simple);
          CHECK(contour_area(s) == doctest::Approx(contour_area(wedge.boundary) / k).epsilon(1e-9));
          CHECK(congruent(s, subs[0]).congruent);
          total += contour_area(s);
        }
        CHECK(total == doctest::Approx(contour_area(wedge.boundary)).epsilon(1e-9));
      }
    }
  }
  CHECK(code_of([&] { subdivide_wedge(build_symmetric_wedge(3, 0.9), 5); }) ==
        ErrorCode::SubdivisionCollision);
  CHECK(code_of([&] { subdivide_wedge(w, 0); }) == ErrorCode::InvalidK);
}

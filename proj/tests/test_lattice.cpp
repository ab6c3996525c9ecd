#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperfan/lattice.hpp"

using namespace hyperfan;

namespace {
Vec3 v3(long a, long b, long c) { return Vec3(Integer(a), Integer(b), Integer(c)); }
Vec2 v2(long a, long b) { return Vec2(Integer(a), Integer(b)); }
}  // namespace

TEST_CASE("det3 pinned values") {
  CHECK(det3(v3(1, 0, 0), v3(1, 1, 0), v3(1, 0, 1)) == 1);
  // expanding along the first row: 1*(1*5 - 0*2) = 5
  CHECK(det3(v3(1, 0, 0), v3(1, 1, 0), v3(1, 2, 5)) == 5);
  CHECK(det3(v3(1, 0, 0), v3(1, 0, 0), v3(1, 1, 1)) == 0);
}

TEST_CASE("det3 is alternating") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    Vec3 a = v3(dist(rng), dist(rng), dist(rng));
    Vec3 b = v3(dist(rng), dist(rng), dist(rng));
    Vec3 c = v3(dist(rng), dist(rng), dist(rng));
    Integer d = det3(a, b, c);
    CHECK(det3(b, a, c) == -d);
    CHECK(det3(a, c, b) == -d);
    CHECK(det3(c, b, a) == -d);
  }
}

TEST_CASE("primitive_of") {
  CHECK(vec_eq(primitive_of(v3(2, 4, 6)), v3(1, 2, 3)));
  CHECK(vec_eq(primitive_of(v3(1, 7, 11)), v3(1, 7, 11)));
  CHECK(vec_eq(primitive_of(v3(0, -3, 3)), v3(0, -1, 1)));
  CHECK_THROWS_AS(primitive_of(v3(0, 0, 0)), InvalidInputError);

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    Vec3 a = v3(dist(rng), dist(rng), dist(rng));
    if (a[0] == 0 && a[1] == 0 && a[2] == 0) continue;
    Vec3 p = primitive_of(a);
    CHECK(vec_eq(primitive_of(p), p));  // idempotent
    CHECK(gcd_all(p) == 1);
  }
}

TEST_CASE("squaring_shear basics") {
  std::vector<Vec2> unit_square = {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)};
  Unimodular2 id = squaring_shear(unit_square);
  CHECK(id.m(0, 0) == 1);
  CHECK(id.m(0, 1) == 0);
  CHECK(id.m(1, 0) == 0);
  CHECK(id.m(1, 1) == 1);

  CHECK_THROWS_AS(squaring_shear({v2(0, 0), v2(1, 1), v2(2, 2)}), InvalidInputError);
}

TEST_CASE("squaring_shear improves the C_{5,2} diagram") {
  std::vector<Vec2> pts = {v2(0, 0), v2(1, 0), v2(2, 5), v2(3, 5)};
  Unimodular2 u = squaring_shear(pts);
  Integer det = u.m(0, 0) * u.m(1, 1) - u.m(0, 1) * u.m(1, 0);
  CHECK((det == 1 || det == -1));
  auto aspect = [](const std::vector<Vec2>& q) {
    Integer minx = q[0][0], maxx = q[0][0], miny = q[0][1], maxy = q[0][1];
    for (const Vec2& p : q) {
      minx = std::min(minx, p[0]); maxx = std::max(maxx, p[0]);
      miny = std::min(miny, p[1]); maxy = std::max(maxy, p[1]);
    }
    Integer w = maxx - minx, h = maxy - miny;
    return Rational(std::max(w, h), std::min(w, h));
  };
  std::vector<Vec2> mapped;
  for (const Vec2& p : pts) mapped.push_back(u.apply(p));
  CHECK(aspect(mapped) < aspect(pts));
  CHECK(aspect(mapped) == Rational(1));  // a 3x3 box is achievable
}

TEST_CASE("squaring_shear output is always unimodular") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec2> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(v2(dist(rng), dist(rng)));
    if (collinear(pts)) continue;
    Unimodular2 u = squaring_shear(pts);
    Integer det = u.m(0, 0) * u.m(1, 1) - u.m(0, 1) * u.m(1, 0);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("convex hull and polygon location") {
  std::vector<Vec2> hull = convex_hull_ccw({v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2), v2(1, 1)});
  CHECK(hull.size() == 4);
  CHECK(locate_in_polygon(hull, v2(1, 1)) == PolygonPosition::Inside);
  CHECK(locate_in_polygon(hull, v2(2, 1)) == PolygonPosition::OnBoundary);
  CHECK(locate_in_polygon(hull, v2(3, 1)) == PolygonPosition::Outside);
}

TEST_CASE("triangle interior overlap") {
  std::array<Vec2, 3> a{v2(0, 0), v2(1, 0), v2(0, 1)};
  std::array<Vec2, 3> b{v2(1, 0), v2(1, 1), v2(0, 1)};   // shares an edge
  std::array<Vec2, 3> c{v2(0, 0), v2(1, 1), v2(1, 0)};   // overlaps a
  CHECK_FALSE(triangles_interior_overlap(a, b));
  CHECK(triangles_interior_overlap(a, c));
}

TEST_CASE("basis completion from a primitive row") {
  for (auto w : {v3(1, 0, 0), v3(0, 0, 1), v3(2, 3, 5), v3(-4, 6, 9), v3(0, -1, 1)}) {
    Unimodular3 u = complete_to_basis_row(w);
    CHECK(vec_eq(Vec3(u.m.row(0)), w));
  }
}

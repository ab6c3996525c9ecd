#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperfan/classify.hpp"
#include "hyperfan/fan.hpp"

using namespace hyperfan;

namespace {
Vec3 v3(long a, long b, long c) { return Vec3(Integer(a), Integer(b), Integer(c)); }

Fan conifold_fan() { return hyperconifold_fan(HyperconifoldClass{1, 0, {0}}); }

// every lattice point of the height-1 polygon, lifted
std::vector<Vec3> polygon_sample(const Fan& f) {
  ToricDiagram d = height_one_slice(f);
  std::vector<Vec3> out;
  for (const DiagramPoint& p : d.points) out.push_back(Vec3(Integer(1), p.p[0], p.p[1]));
  return out;
}
}  // namespace

TEST_CASE("multiplicity") {
  CHECK(multiplicity(make_cone({v3(1, 0, 0), v3(1, 1, 0), v3(1, 0, 1)})) == 1);
  CHECK(multiplicity(make_cone({v3(1, 0, 0), v3(1, 1, 0), v3(1, 2, 5)})) == 5);
  CHECK_THROWS_AS(multiplicity(make_cone({v3(1, 0, 0), v3(1, 1, 0)})), InvalidInputError);
}

TEST_CASE("conifold fan is singular, unit simplex is smooth") {
  CHECK_FALSE(is_smooth(conifold_fan()));
  Fan simplex;
  simplex.maximal.push_back(make_cone({v3(1, 0, 0), v3(1, 1, 0), v3(1, 0, 1)}));
  CHECK(is_smooth(simplex));
}

TEST_CASE("star subdivision of the parallelogram cone gives four cones") {
  Fan f = hyperconifold_fan(HyperconifoldClass{3, 1, {1}});
  Fan f1 = star_subdivision(f, v3(1, 1, 1));
  CHECK(f1.maximal.size() == 4);
  CHECK(fan_faces_valid(f1));
  // support unchanged
  for (const Vec3& p : polygon_sample(f)) CHECK(fan_contains(f1, p));

  // second center lies on a wall: both adjacent cones split, net +2
  Fan f2 = star_subdivision(f1, v3(1, 1, 2));
  CHECK(f2.maximal.size() == 6);
  CHECK(fan_faces_valid(f2));
  CHECK(is_smooth(f2));
  for (const Vec3& p : polygon_sample(f)) CHECK(fan_contains(f2, p));
}

TEST_CASE("star subdivision inside a 3D cone replaces it by three") {
  Fan f;
  f.maximal.push_back(make_cone({v3(1, 0, 0), v3(1, 3, 0), v3(1, 0, 3)}));
  Fan g = star_subdivision(f, v3(1, 1, 1));
  CHECK(g.maximal.size() == 3);
  CHECK(fan_faces_valid(g));
}

TEST_CASE("star subdivision edge cases") {
  Fan f = conifold_fan();
  // already a ray: identity
  Fan same = star_subdivision(f, v3(1, 0, 0));
  CHECK(same.maximal.size() == f.maximal.size());
  // outside the support
  CHECK_THROWS_AS(star_subdivision(f, v3(1, 5, 5)), InvalidInputError);
  // non-primitive center
  CHECK_THROWS_AS(star_subdivision(f, v3(2, 0, 0)), InvalidInputError);
}

TEST_CASE("height_one_slice of the conifold") {
  ToricDiagram d = height_one_slice(conifold_fan());
  CHECK(d.polygon.size() == 4);
  CHECK(d.lattice_area_twice() == 2);
  CHECK(d.count(PointKind::Vertex) == 4);
  CHECK(d.count(PointKind::Interior) == 0);
}

TEST_CASE("height_one_slice normalizes a sheared fan") {
  // conifold cone pushed off the first-coordinate hyperplane by a unimodular map
  Mat3 u;
  u << 1, 1, 0,
       0, 1, 0,
       1, 0, 1;
  Fan f = conifold_fan();
  Fan sheared;
  std::vector<Vec3> gens;
  for (const Vec3& g : f.maximal[0].generators) gens.push_back(Vec3(u * g));
  sheared.maximal.push_back(Cone{gens});
  ToricDiagram d = height_one_slice(sheared);
  CHECK(d.polygon.size() == 4);
  CHECK(d.lattice_area_twice() == 2);
}

TEST_CASE("height_one_slice rejects non-crepant fans") {
  // the only functional with <w, r> = 1 on all three rays is (1, 1, -1/3)
  Fan f;
  f.maximal.push_back(Cone{{v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 3)}});
  CHECK_THROWS_AS(height_one_slice(f), InvalidInputError);

  // rays on no common hyperplane at all
  Fan g;
  g.maximal.push_back(Cone{{v3(1, 0, 0), v3(1, 1, 0), v3(1, 0, 1)}});
  g.maximal.push_back(Cone{{v3(1, 1, 0), v3(1, 0, 1), v3(2, 1, 1)}});
  CHECK_THROWS_AS(height_one_slice(g), InvalidInputError);
}

TEST_CASE("smooth fan walls extend to lattice bases") {
  HyperconifoldClass c{5, 2, {2, 3}};
  Fan f = hyperconifold_fan(c);
  for (const Vec3& v : {v3(1, 1, 1), v3(1, 1, 2), v3(1, 2, 3), v3(1, 2, 4)})
    f = star_subdivision(f, v);
  REQUIRE(is_smooth(f));
  REQUIRE(f.maximal.size() == 10);
  for (const Cone& cone : f.maximal) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Vec3& a = cone.generators[i];
      const Vec3& b = cone.generators[(i + 1) % 3];
      // gcd of the 2x2 minors must be 1
      Integer m1 = a[0] * b[1] - a[1] * b[0];
      Integer m2 = a[0] * b[2] - a[2] * b[0];
      Integer m3 = a[1] * b[2] - a[2] * b[1];
      using boost::multiprecision::gcd;
      CHECK(gcd(gcd(m1, m2), m3) == 1);
    }
  }
}

TEST_CASE("parametrization identities") { CHECK(verify_parametrizations()); }

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperfan/intersect.hpp"

using namespace hyperfan;

namespace {

Vec3 v3(long a, long b, long c) { return Vec3(Integer(a), Integer(b), Integer(c)); }

std::vector<HyperconifoldClass> classes_up_to(std::int64_t nmax) {
  std::vector<HyperconifoldClass> out;
  out.push_back(canonical_form(1, 0));
  for (std::int64_t n = 2; n <= nmax; ++n)
    for (std::int64_t k = 1; k < n; ++k)
      if (gcd64(k, n) == 1) out.push_back(HyperconifoldClass{n, k, {}});
  return out;
}

// the two C_{3,1} resolutions in enumeration order
std::vector<Resolution> c31() { return enumerate_crepant_resolutions(HyperconifoldClass{3, 1, {}}); }

Rational dot(const std::vector<Integer>& row, const std::vector<Rational>& t) {
  Rational acc(0);
  for (std::size_t i = 0; i < row.size(); ++i) acc += Rational(row[i]) * t[i];
  return acc;
}

}  // namespace

TEST_CASE("wall relations close exactly on every compact wall") {
  for (const HyperconifoldClass& c : classes_up_to(8)) {
    if (c.n == 1) continue;
    Resolution r = crepant_resolution(c);
    int compact = 0;
    for (const Wall& w : walls_of(r)) {
      if (!w.compact) {
        CHECK_THROWS_AS(wall_relation(r, w), DomainError);
        continue;
      }
      ++compact;
      WallRelation rel = wall_relation(r, w);
      Vec3 sum = rel.u + rel.u_prime + rel.a * w.r1 + rel.b * w.r2;
      CHECK(sum[0] == 0);
      CHECK(sum[1] == 0);
      CHECK(sum[2] == 0);
    }
    // interior edge count of a triangulated n-gon with n-1 interior points
    CHECK(compact == 3 * c.n - 2);
  }
}

TEST_CASE("C_{3,1} local ample cones match the worked example") {
  auto rs = c31();
  REQUIRE(rs.size() == 2);

  // resolution 1: two F1 surfaces glued along a P1; cone 2 t1 < t2 < t1/2
  ConeDescription cone1 = local_ample_cone(rs[0]);
  REQUIRE(cone1.variables.size() == 2);
  CHECK(vec_eq(cone1.variables[0], v3(1, 1, 1)));
  CHECK(vec_eq(cone1.variables[1], v3(1, 1, 2)));
  CHECK(cone1.nonempty);
  REQUIRE(cone1.witness.size() == 2);
  CHECK(cone1.witness[0] < 0);
  CHECK(cone1.witness[1] < 0);
  for (const auto& row : cone1.inequalities) CHECK(dot(row, cone1.witness) > 0);

  // double inclusion against { -2 t1 + t2 >= 0, t1 - 2 t2 >= 0 }
  std::vector<std::vector<Integer>> reference = {{Integer(-2), Integer(1)},
                                                 {Integer(1), Integer(-2)}};
  std::vector<Vec2> ours = cone2_extreme_rays(cone1.inequalities);
  std::vector<Vec2> ref = cone2_extreme_rays(reference);
  REQUIRE(ours.size() == 2);
  REQUIRE(ref.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(vec_eq(ours[i], ref[i]));
  for (const Vec2& ray : ours)
    for (const auto& row : reference) CHECK(row[0] * ray[0] + row[1] * ray[1] >= 0);
  for (const Vec2& ray : ref)
    for (const auto& row : cone1.inequalities) CHECK(row[0] * ray[0] + row[1] * ray[1] >= 0);

  // resolution 2: empty cone (t1 < 0, t2 < 0 against t1 + t2 > 0)
  ConeDescription cone2 = local_ample_cone(rs[1]);
  CHECK_FALSE(cone2.nonempty);
  bool has_sum_row = false;
  for (const auto& row : cone2.inequalities)
    if (row[0] == 1 && row[1] == 1) has_sum_row = true;
  CHECK(has_sum_row);
}

TEST_CASE("conifold small resolutions have no local ample divisors") {
  for (const Resolution& r : enumerate_crepant_resolutions(canonical_form(1, 0))) {
    ConeDescription cd = local_ample_cone(r);
    CHECK(cd.variables.empty());
    CHECK(cd.no_local_divisors);
    CHECK_FALSE(cd.nonempty);
  }
}

TEST_CASE("projective_resolutions") {
  CHECK(projective_resolutions(HyperconifoldClass{3, 1, {}}).size() == 1);
  CHECK(projective_resolutions(canonical_form(1, 0)).empty());
  // the star-sequence triangulation is always among the projective ones
  for (const HyperconifoldClass& c : classes_up_to(5)) {
    if (c.n == 1) continue;
    Resolution star = crepant_resolution(c);
    bool found = false;
    for (const Resolution& r : projective_resolutions(c))
      if (same_triangulation(star, r)) found = true;
    CHECK(found);
  }
}

TEST_CASE("star-sequence resolutions are projective for n <= 20 with negative witness") {
  for (const HyperconifoldClass& c : classes_up_to(20)) {
    if (c.n == 1) continue;
    ConeDescription cd = local_ample_cone(crepant_resolution(c));
    CHECK(cd.nonempty);
    for (const Rational& t : cd.witness) CHECK(t < 0);
  }
}

TEST_CASE("every ample-cone solution has negative coordinates") {
  // the cone lies in the negative orthant: adding t_a >= 0 kills feasibility
  for (const HyperconifoldClass& c : classes_up_to(6)) {
    for (const Resolution& r : enumerate_crepant_resolutions(c)) {
      ConeDescription cd = local_ample_cone(r);
      if (cd.variables.empty()) continue;
      for (std::size_t a = 0; a < cd.variables.size(); ++a) {
        std::vector<Integer> axis(cd.variables.size(), Integer(0));
        axis[a] = 1;
        StrictFeasibility f = strictly_feasible(cd.inequalities, cd.variables.size(), {axis});
        CHECK_FALSE(f.feasible);
      }
    }
  }
}

TEST_CASE("C_{3,1} exceptional surfaces") {
  auto rs = c31();
  auto s1 = exceptional_surfaces(rs[0]);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].label == "F1");
  CHECK(s1[1].label == "F1");
  // glued: the two centers share a wall
  bool glued = false;
  for (const Wall& w : walls_of(rs[0]))
    if (vec_eq(w.r1, s1[0].center) && vec_eq(w.r2, s1[1].center)) glued = w.compact;
  CHECK(glued);

  auto s2 = exceptional_surfaces(rs[1]);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].label == "P2");
  CHECK(s2[1].label == "P2");
  bool adjacent = false;
  for (const Wall& w : walls_of(rs[1]))
    if (vec_eq(w.r1, s2[0].center) && vec_eq(w.r2, s2[1].center)) adjacent = true;
  CHECK_FALSE(adjacent);
}

TEST_CASE("C_{2,1} exceptional surface is P1 x P1") {
  Resolution r = enumerate_crepant_resolutions(HyperconifoldClass{2, 1, {}})[0];
  auto surfaces = exceptional_surfaces(r);
  REQUIRE(surfaces.size() == 1);
  CHECK(surfaces[0].label == "F0");
  CHECK(surfaces[0].self_intersections ==
        std::vector<Integer>{Integer(0), Integer(0), Integer(0), Integer(0)});
}

TEST_CASE("surface cycles satisfy the smooth complete constraint") {
  // sum of self-intersections = 12 - 3 * (number of rays)
  for (const HyperconifoldClass& c : classes_up_to(10)) {
    if (c.n == 1) continue;
    for (const ExceptionalSurface& s : exceptional_surfaces(crepant_resolution(c))) {
      Integer sum(0);
      for (const Integer& x : s.self_intersections) sum += x;
      CHECK(sum == Integer(12 - 3 * static_cast<long>(s.self_intersections.size())));
    }
  }
}

TEST_CASE("C_{3,1} triple intersections") {
  auto rs = c31();
  IntersectionTensor t1 = triple_intersections(rs[0]);
  REQUIRE(t1.size == 2);
  CHECK(t1.at(0, 0, 0) == 8);   // K^2 of F1
  CHECK(t1.at(1, 1, 1) == 8);
  CHECK(t1.at(0, 0, 1) == -1);  // the gluing curve is the -1 section in each F1
  CHECK(t1.at(0, 1, 1) == -1);

  IntersectionTensor t2 = triple_intersections(rs[1]);
  CHECK(t2.at(0, 0, 0) == 9);   // K^2 of P2
  CHECK(t2.at(1, 1, 1) == 9);
  CHECK(t2.at(0, 0, 1) == 0);   // disjoint surfaces
  CHECK(t2.at(0, 1, 1) == 0);
}

TEST_CASE("tensor symmetry") {
  Resolution r = crepant_resolution(HyperconifoldClass{5, 2, {}});
  IntersectionTensor t = triple_intersections(r);
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b)
      for (std::size_t c = 0; c < t.size; ++c) {
        CHECK(t.at(a, b, c) == t.at(a, c, b));
        CHECK(t.at(a, b, c) == t.at(b, a, c));
        CHECK(t.at(a, b, c) == t.at(c, b, a));
      }
}

TEST_CASE("tensor agrees with the wall-pairing oracle on every resolution, n <= 4") {
  for (const HyperconifoldClass& c : classes_up_to(4)) {
    for (const Resolution& r : enumerate_crepant_resolutions(c)) {
      IntersectionTensor a = triple_intersections(r);
      IntersectionTensor b = triple_intersections_oracle(r);
      REQUIRE(a.size == b.size);
      CHECK(a.d == b.d);
    }
  }
  // star sequences a bit beyond the enumeration range
  for (const HyperconifoldClass& c : classes_up_to(8)) {
    if (c.n == 1) continue;
    Resolution r = crepant_resolution(c);
    CHECK(triple_intersections(r).d == triple_intersections_oracle(r).d);
  }
}

TEST_CASE("adjunction identity on every compact wall") {
  for (const HyperconifoldClass& c : classes_up_to(8)) {
    for (const Resolution& r :
         c.n == 1 ? enumerate_crepant_resolutions(c) : std::vector<Resolution>{crepant_resolution(c)})
      CHECK(adjunction_check(r));
  }
  for (const Resolution& r : c31()) CHECK(adjunction_check(r));
}

TEST_CASE("wall pairing pinned values for C_{3,1} resolution 1") {
  Resolution r = c31()[0];
  // the 0-curves of each F1 pair to -2 with their center divisor
  // and the gluing curve pairs to -1 with both centers
  Vec3 i1 = v3(1, 1, 1), i2 = v3(1, 1, 2);
  for (const Wall& w : walls_of(r)) {
    if (!w.compact) continue;
    WallRelation rel = wall_relation(r, w);
    if (vec_eq(w.r1, i1) && vec_eq(w.r2, i2)) {
      CHECK(rel.pairing.at(i1) == -1);
      CHECK(rel.pairing.at(i2) == -1);
      CHECK(rel.pairing.at(v3(1, 0, 0)) == 1);
      CHECK(rel.pairing.at(v3(1, 2, 3)) == 1);
    }
    if (vec_eq(w.r1, v3(1, 0, 0)) && vec_eq(w.r2, i1)) {
      CHECK(rel.pairing.at(i1) == -2);  // K_S . C = -2 - 0
      CHECK(rel.pairing.at(i2) == 1);
    }
  }
}

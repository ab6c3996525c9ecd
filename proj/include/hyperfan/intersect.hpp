#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperfan/linear.hpp"
#include "hyperfan/resolve.hpp"

namespace hyperfan {

// Codimension-1 cone of a resolution, identified with its toric curve.
struct Wall {
  Vec3 r1, r2;              // rays, lex-ordered
  int cone_a = -1, cone_b = -1;  // adjacent maximal cones (cone_b = -1 on the boundary)
  bool compact = false;     // slice edge interior to the diagram polygon
};

std::vector<Wall> walls_of(const Resolution& r);

// The unique integers with u + u' + a*w1 + b*w2 = 0, u/u' the opposite rays
// of the two adjacent cones.  Then D_u.C = D_{u'}.C = 1, D_{w1}.C = a,
// D_{w2}.C = b and all other divisor pairings vanish.
struct WallRelation {
  Integer a, b;
  Vec3 u, u_prime;
  // full pairing vector D_rho . C over the fan's rays, keyed by ray
  std::map<Vec3, Integer, Vec3Less> pairing;
};

WallRelation wall_relation(const Resolution& r, const Wall& w);

// Local ample/Kaehler cone in exceptional-divisor coefficient space: one
// strict inequality per compact wall, variables only on interior rays.
struct ConeDescription {
  std::vector<Vec3> variables;                    // interior rays, order fixed
  std::vector<std::vector<Integer>> inequalities;  // rows: sum_a t_a c_a > 0
  bool nonempty = false;
  std::vector<Rational> witness;                  // nonempty only
  bool no_local_divisors = false;                 // zero variables
};

ConeDescription local_ample_cone(const Resolution& r);

std::vector<Resolution> projective_resolutions(const HyperconifoldClass& c,
                                               std::int64_t bound = kDefaultEnumerationBound);

// Exceptional surface over an interior ray: its star (link) fan and the
// self-intersections of the boundary curves, with a label when recognized.
struct ExceptionalSurface {
  Vec3 center;
  std::vector<Vec2> cycle_rays;          // primitive directions, cyclic ccw
  std::vector<Vec3> cycle_neighbors;     // the corresponding fan rays
  std::vector<Integer> self_intersections;
  std::string label;                     // "P2", "F0", "F1", ... or generic
};

std::vector<ExceptionalSurface> exceptional_surfaces(const Resolution& r);

// Symmetric triple intersections d_{abc} of the exceptional divisors,
// indexed like ConeDescription::variables.
struct IntersectionTensor {
  std::size_t size = 0;
  std::vector<Integer> d;  // size^3, fully symmetric

  Integer& at(std::size_t i, std::size_t j, std::size_t k) {
    return d[(i * size + j) * size + k];
  }
  const Integer& at(std::size_t i, std::size_t j, std::size_t k) const {
    return d[(i * size + j) * size + k];
  }
};

IntersectionTensor triple_intersections(const Resolution& r);

// Independent route: all entries from wall pairings and the linear
// equivalence sum_rho D_rho ~ 0 at height 1; disagreement throws.
IntersectionTensor triple_intersections_oracle(const Resolution& r);

// K_S . C = -2 - C^2 on every compact wall lying in an exceptional surface.
bool adjunction_check(const Resolution& r);

// 2D cone {A t >= 0}: extreme rays as primitive integer vectors (2 variables).
std::vector<Vec2> cone2_extreme_rays(const std::vector<std::vector<Integer>>& rows);

}  // namespace hyperfan

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperfan/lattice.hpp"
#include "hyperfan/types.hpp"

namespace hyperfan {

// Rational polyhedral cone over a height-1 lattice polygon.  Simplicial with
// up to 3 generators; the unresolved hyperconifold keeps its single
// 4-generator cone explicitly.  Generators are primitive and stored in
// counter-clockwise order of their height-1 slice.
struct Cone {
  std::vector<Vec3> generators;
  bool simplicial() const { return generators.size() <= 3; }
  std::size_t dim() const;
};

struct Fan {
  std::vector<Cone> maximal;
  std::vector<Vec3> rays() const;  // deduplicated, lex-sorted
  bool has_ray(const Vec3& v) const;
};

enum class PointKind { Vertex, Boundary, Interior };

struct DiagramPoint {
  Vec2 p;
  PointKind kind;
};

// Height-1 slice of a Calabi-Yau fan: the polygon, all its lattice points
// (flagged vertex/boundary/interior), and the triangulation edges when the
// fan is simplicial.
struct ToricDiagram {
  std::vector<Vec2> polygon;  // ccw
  std::vector<DiagramPoint> points;
  std::vector<std::pair<Vec2, Vec2>> edges;

  Integer lattice_area_twice() const;  // 2 * area, exact
  std::size_t count(PointKind k) const;
};

// |det| of the generators; 1 iff the cone is smooth.
Integer multiplicity(const Cone& c);

bool is_smooth(const Fan& f);

// v in the support of f?  (fans here are crepant: all rays at height 1)
bool fan_contains(const Fan& f, const Vec3& v);

// Star subdivision at a primitive lattice vector v in the support: cones not
// containing v are kept; cones containing v are replaced by the joins of v
// with their v-free facets.  If v is already a ray, returns f unchanged.
Fan star_subdivision(const Fan& f, const Vec3& v);

// Every pair of maximal cones meets in a common face (checked pairwise).
bool fan_faces_valid(const Fan& f);

ToricDiagram height_one_slice(const Fan& f);

// Exact exponent-vector identities for the toric and homogeneous-coordinate
// substitutions into y1*y4 - y2*y3, plus invariance under the z-rescaling.
bool verify_parametrizations();

Cone make_cone(std::vector<Vec3> gens);

}  // namespace hyperfan

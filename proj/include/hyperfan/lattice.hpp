#pragma once

#include <optional>
#include <vector>

#include "hyperfan/types.hpp"

namespace hyperfan {

// 2D unimodular map (determinant +1 or -1).
struct Unimodular2 {
  Mat2 m;
  explicit Unimodular2(Mat2 mat);
  Vec2 apply(const Vec2& v) const { return m * v; }
};

// 3D unimodular map.
struct Unimodular3 {
  Mat3 m;
  explicit Unimodular3(Mat3 mat);
  Vec3 apply(const Vec3& v) const { return m * v; }
};

template <typename A, typename B>
Integer det2(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return Integer(a[0] * b[1] - a[1] * b[0]);
}

template <typename A, typename B, typename C>
Integer det3(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
             const Eigen::MatrixBase<C>& c) {
  return Integer(a[0] * (b[1] * c[2] - b[2] * c[1]) -
                 a[1] * (b[0] * c[2] - b[2] * c[0]) +
                 a[2] * (b[0] * c[1] - b[1] * c[0]));
}

Integer gcd_all(const Vec2& v);
Integer gcd_all(const Vec3& v);

Vec2 primitive_of(const Vec2& v);
Vec3 primitive_of(const Vec3& v);

// cross(b - a, c - a): > 0 when a,b,c turn counter-clockwise.
Integer orient2(const Vec2& a, const Vec2& b, const Vec2& c);

bool collinear(const std::vector<Vec2>& pts);

// Convex hull in counter-clockwise order, collinear points dropped.
std::vector<Vec2> convex_hull_ccw(std::vector<Vec2> pts);

// Where a point sits relative to a ccw convex polygon.
enum class PolygonPosition { Outside, OnBoundary, Inside };
PolygonPosition locate_in_polygon(const std::vector<Vec2>& hull_ccw, const Vec2& p);

// q on the closed segment [a, b]?
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& q);

// Do the ccw triangles share an interior point? (exact separating-axis test)
bool triangles_interior_overlap(const std::array<Vec2, 3>& t1, const std::array<Vec2, 3>& t2);

// Unimodular matrix whose first row is the primitive vector w.
Unimodular3 complete_to_basis_row(const Vec3& w);

// Presentation heuristic: a unimodular 2D map making the axis-aligned
// bounding box of the points as square as possible.  Searches products of at
// most two elementary shears with entries bounded by the diagram height;
// ties broken toward the identity, then lexicographically.
Unimodular2 squaring_shear(const std::vector<Vec2>& diagram_points);

}  // namespace hyperfan

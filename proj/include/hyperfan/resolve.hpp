#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hyperfan/classify.hpp"
#include "hyperfan/fan.hpp"

namespace hyperfan {

// Triangle of the height-1 diagram, vertices lex-sorted.
using Triangle = std::array<Vec2, 3>;

Triangle canonical_triangle(const Vec2& a, const Vec2& b, const Vec2& c);

// A crepant resolution of C_{n,k}: a smooth height-1 fan with 2n maximal
// cones, plus the star-subdivision history when built that way.
struct Resolution {
  HyperconifoldClass base;
  Fan fan;
  std::vector<Vec3> history;
  bool built_by_star_sequence = false;

  std::vector<Triangle> triangles() const;  // canonical, sorted
  std::vector<Vec3> interior_rays() const;  // exceptional divisors, sorted by (y, x)
};

bool same_triangulation(const Resolution& a, const Resolution& b);

// The n-1 interior lattice points (1, l, m) of the diagram cone, ascending m.
std::vector<Vec3> interior_points(const HyperconifoldClass& c);

// Sequential star subdivisions at the interior points (default: ascending m
// order; `order` is a permutation of 1..n-1 selecting another sequence).
Resolution crepant_resolution(const HyperconifoldClass& c,
                              const std::optional<std::vector<int>>& order = std::nullopt);

inline constexpr std::int64_t kDefaultEnumerationBound = 6;

// All unimodular triangulations of the diagram's lattice-point set, lifted to
// smooth crepant fans; sorted lexicographically by canonical triangle list.
std::vector<Resolution> enumerate_crepant_resolutions(
    const HyperconifoldClass& c, std::int64_t bound = kDefaultEnumerationBound);

// Euler number of the resolved space: the number of top-dimensional cones.
std::int64_t euler_number(const Resolution& r);

}  // namespace hyperfan

#include "hyperfan/lattice.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hyperfan {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t k, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t r0 = n, r1 = mod_pos(k, n);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw InvalidInputError("mod_inverse: arguments are not coprime");
  return mod_pos(s0, n);
}

Unimodular2::Unimodular2(Mat2 mat) : m(std::move(mat)) {
  Integer d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (d != 1 && d != -1) throw InvalidInputError("2D map is not unimodular");
}

Unimodular3::Unimodular3(Mat3 mat) : m(std::move(mat)) {
  Integer d = det3(Vec3(m.row(0)), Vec3(m.row(1)), Vec3(m.row(2)));
  if (d != 1 && d != -1) throw InvalidInputError("3D map is not unimodular");
}

Integer gcd_all(const Vec2& v) {
  using boost::multiprecision::gcd;
  return gcd(v[0], v[1]);
}

Integer gcd_all(const Vec3& v) {
  using boost::multiprecision::gcd;
  return gcd(gcd(v[0], v[1]), v[2]);
}

Vec2 primitive_of(const Vec2& v) {
  Integer g = gcd_all(v);
  if (g == 0) throw InvalidInputError("zero vector has no primitive");
  return Vec2(v[0] / g, v[1] / g);
}

Vec3 primitive_of(const Vec3& v) {
  Integer g = gcd_all(v);
  if (g == 0) throw InvalidInputError("zero vector has no primitive");
  return Vec3(v[0] / g, v[1] / g, v[2] / g);
}

Integer orient2(const Vec2& a, const Vec2& b, const Vec2& c) {
  return det2(Vec2(b - a), Vec2(c - a));
}

bool collinear(const std::vector<Vec2>& pts) {
  std::size_t second = 1;
  while (second < pts.size() && vec_eq(pts[second], pts[0])) ++second;
  if (second >= pts.size()) return true;  // at most one distinct point
  for (std::size_t i = second + 1; i < pts.size(); ++i) {
    if (orient2(pts[0], pts[second], pts[i]) != 0) return false;
  }
  return true;
}

std::vector<Vec2> convex_hull_ccw(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), Vec2Less{});
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return vec_eq(a, b); }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && orient2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && orient2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

PolygonPosition locate_in_polygon(const std::vector<Vec2>& hull, const Vec2& p) {
  bool boundary = false;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    Integer o = orient2(hull[i], hull[(i + 1) % n], p);
    if (o < 0) return PolygonPosition::Outside;
    if (o == 0) {
      if (on_segment(hull[i], hull[(i + 1) % n], p)) boundary = true;
      else return PolygonPosition::Outside;
    }
  }
  return boundary ? PolygonPosition::OnBoundary : PolygonPosition::Inside;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& q) {
  if (orient2(a, b, q) != 0) return false;
  Integer dot = (q[0] - a[0]) * (b[0] - a[0]) + (q[1] - a[1]) * (b[1] - a[1]);
  Integer len2 = (b[0] - a[0]) * (b[0] - a[0]) + (b[1] - a[1]) * (b[1] - a[1]);
  return dot >= 0 && dot <= len2;
}

namespace {

// All vertices of `other` weakly on the right of some ccw edge of `tri`?
bool separated_by_edge(const std::array<Vec2, 3>& tri, const std::array<Vec2, 3>& other) {
  for (int i = 0; i < 3; ++i) {
    const Vec2& a = tri[i];
    const Vec2& b = tri[(i + 1) % 3];
    bool all_right = true;
    for (const Vec2& w : other) {
      if (orient2(a, b, w) > 0) { all_right = false; break; }
    }
    if (all_right) return true;
  }
  return false;
}

std::array<Vec2, 3> ccw_of(std::array<Vec2, 3> t) {
  if (orient2(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
  return t;
}

}  // namespace

bool triangles_interior_overlap(const std::array<Vec2, 3>& t1, const std::array<Vec2, 3>& t2) {
  std::array<Vec2, 3> a = ccw_of(t1), b = ccw_of(t2);
  return !separated_by_edge(a, b) && !separated_by_edge(b, a);
}

Unimodular3 complete_to_basis_row(const Vec3& w) {
  if (gcd_all(w) != 1) throw InvalidInputError("row completion needs a primitive vector");
  // g, x, y with a x + b y = g >= 0
  auto ext = [](const Integer& a, const Integer& b) {
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      Integer q = r0 / r1;
      Integer r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return std::array<Integer, 3>{r0, s0, t0};
  };
  Mat3 m;
  m.row(0) = w.transpose();
  auto [g, x, y] = ext(w[0], w[1]);
  if (g == 0) {
    // w = (0, 0, +-1)
    m.row(1) = Vec3(Integer(1), Integer(0), Integer(0)).transpose();
    m.row(2) = Vec3(Integer(0), w[2], Integer(0)).transpose();
  } else {
    // x (w0/g) + y (w1/g) = 1, so (-y, x, 0) completes the 2D part;
    // the third row restores det 1 via u g + v w2 = 1.
    auto [one, u, v] = ext(g, w[2]);
    if (one != 1) throw InvalidInputError("row completion needs a primitive vector");
    m.row(1) = Vec3(-y, x, Integer(0)).transpose();
    m.row(2) = Vec3(-v * (w[0] / g), -v * (w[1] / g), u).transpose();
  }
  Integer d = det3(Vec3(m.row(0)), Vec3(m.row(1)), Vec3(m.row(2)));
  if (d != 1 && d != -1) throw InvalidInputError("basis completion failed");
  return Unimodular3(m);
}

namespace {

struct ShearCandidate {
  Mat2 m;
  Rational aspect;
  Integer shear_mass;  // |s| + |t| of the elementary factors
  std::array<Integer, 4> lex;
};

Rational bbox_aspect(const std::vector<Vec2>& pts, const Mat2& m) {
  Integer minx, maxx, miny, maxy;
  bool first = true;
  for (const Vec2& p : pts) {
    Vec2 q = m * p;
    if (first) { minx = maxx = q[0]; miny = maxy = q[1]; first = false; continue; }
    minx = std::min(minx, q[0]); maxx = std::max(maxx, q[0]);
    miny = std::min(miny, q[1]); maxy = std::max(maxy, q[1]);
  }
  Integer w = maxx - minx, h = maxy - miny;
  if (w == 0 || h == 0) return Rational(std::numeric_limits<std::int64_t>::max());
  Integer lo = std::min(w, h), hi = std::max(w, h);
  return Rational(hi, lo);
}

}  // namespace

Unimodular2 squaring_shear(const std::vector<Vec2>& diagram_points) {
  if (diagram_points.size() < 3 || collinear(diagram_points)) {
    throw InvalidInputError("degenerate diagram");
  }
  Integer miny = diagram_points[0][1], maxy = miny;
  for (const Vec2& p : diagram_points) {
    miny = std::min(miny, p[1]);
    maxy = std::max(maxy, p[1]);
  }
  std::int64_t height = to_int64(maxy - miny);
  std::int64_t bound = std::max<std::int64_t>(height, 1);

  std::optional<ShearCandidate> best;
  auto consider = [&](Integer s, Integer t, bool x_first) {
    Mat2 sx, sy;
    sx << 1, s, 0, 1;
    sy << 1, 0, t, 1;
    Mat2 m = x_first ? Mat2(sy * sx) : Mat2(sx * sy);
    for (int i = 0; i < 4; ++i) {
      if (abs(m(i / 2, i % 2)) > bound) return;
    }
    ShearCandidate c;
    c.m = m;
    c.aspect = bbox_aspect(diagram_points, m);
    c.shear_mass = abs(s) + abs(t);
    c.lex = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    if (!best || c.aspect < best->aspect ||
        (c.aspect == best->aspect && c.shear_mass < best->shear_mass) ||
        (c.aspect == best->aspect && c.shear_mass == best->shear_mass && c.lex < best->lex)) {
      best = c;
    }
  };
  for (std::int64_t s = -bound; s <= bound; ++s) {
    for (std::int64_t t = -bound; t <= bound; ++t) {
      consider(Integer(s), Integer(t), true);
      consider(Integer(s), Integer(t), false);
    }
  }
  return Unimodular2(best->m);
}

}  // namespace hyperfan

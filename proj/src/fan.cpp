#include "hyperfan/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperfan {

namespace {

Vec2 slice_point(const Vec3& r) {
  if (r[0] != 1) throw InvalidInputError("ray off the height-1 hyperplane");
  return Vec2(r[1], r[2]);
}

std::vector<Vec2> slice_points(const Cone& c) {
  std::vector<Vec2> pts;
  pts.reserve(c.generators.size());
  for (const Vec3& g : c.generators) pts.push_back(slice_point(g));
  return pts;
}

void require_height_one(const Fan& f) {
  for (const Cone& c : f.maximal)
    for (const Vec3& g : c.generators)
      if (g[0] != 1) throw InvalidInputError("fan is not in crepant normal form");
}

// Intersection of two convex polygons with rational vertices
// (Sutherland-Hodgman against each ccw edge of the clip polygon).
using RPoint = std::array<Rational, 2>;

Rational rcross(const RPoint& o, const RPoint& a, const RPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<RPoint> clip_polygon(std::vector<RPoint> poly, const RPoint& a, const RPoint& b) {
  std::vector<RPoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RPoint& p = poly[i];
    const RPoint& q = poly[(i + 1) % n];
    Rational sp = rcross(a, b, p);
    Rational sq = rcross(a, b, q);
    if (sp >= 0) out.push_back(p);
    if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
      Rational t = sp / (sp - sq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  // drop duplicates
  std::vector<RPoint> dedup;
  for (const RPoint& p : out) {
    bool seen = false;
    for (const RPoint& q : dedup)
      if (p[0] == q[0] && p[1] == q[1]) { seen = true; break; }
    if (!seen) dedup.push_back(p);
  }
  return dedup;
}

std::vector<RPoint> polygon_intersection(const std::vector<Vec2>& p_ccw,
                                         const std::vector<Vec2>& q_ccw) {
  std::vector<RPoint> poly;
  for (const Vec2& v : p_ccw) poly.push_back({Rational(v[0]), Rational(v[1])});
  const std::size_t n = q_ccw.size();
  for (std::size_t i = 0; i < n && !poly.empty(); ++i) {
    RPoint a{Rational(q_ccw[i][0]), Rational(q_ccw[i][1])};
    RPoint b{Rational(q_ccw[(i + 1) % n][0]), Rational(q_ccw[(i + 1) % n][1])};
    poly = clip_polygon(std::move(poly), a, b);
  }
  return poly;
}

}  // namespace

std::size_t Cone::dim() const {
  if (generators.empty()) return 0;
  if (generators.size() == 1) return 1;
  if (generators.size() == 2) return 2;
  return 3;  // 3 or 4 height-1 generators in ccw position span rank 3
}

std::vector<Vec3> Fan::rays() const {
  std::set<Vec3, Vec3Less> out;
  for (const Cone& c : maximal)
    for (const Vec3& g : c.generators) out.insert(g);
  return {out.begin(), out.end()};
}

bool Fan::has_ray(const Vec3& v) const {
  for (const Cone& c : maximal)
    for (const Vec3& g : c.generators)
      if (vec_eq(g, v)) return true;
  return false;
}

Integer ToricDiagram::lattice_area_twice() const {
  Integer s = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = polygon[i];
    const Vec2& b = polygon[(i + 1) % n];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s < 0 ? Integer(-s) : s;
}

std::size_t ToricDiagram::count(PointKind k) const {
  std::size_t c = 0;
  for (const DiagramPoint& dp : points)
    if (dp.kind == k) ++c;
  return c;
}

Cone make_cone(std::vector<Vec3> gens) {
  for (Vec3& g : gens) g = primitive_of(g);
  Cone c{std::move(gens)};
  if (c.generators.size() >= 3) {
    // order generators ccw along the height-1 slice
    std::vector<Vec2> pts = slice_points(c);
    std::vector<Vec2> hull = convex_hull_ccw(pts);
    if (hull.size() != c.generators.size())
      throw InvalidInputError("cone generators are not in convex position");
    std::vector<Vec3> ordered;
    for (const Vec2& h : hull) ordered.push_back(Vec3(Integer(1), h[0], h[1]));
    c.generators = std::move(ordered);
  }
  return c;
}

Integer multiplicity(const Cone& c) {
  if (c.dim() < 3 || !c.simplicial()) {
    if (c.dim() < 3)
      throw InvalidInputError("multiplicity defined for full-dimensional cones only");
    throw InvalidInputError("multiplicity defined for simplicial cones only");
  }
  Integer d = det3(c.generators[0], c.generators[1], c.generators[2]);
  return d < 0 ? Integer(-d) : d;
}

bool is_smooth(const Fan& f) {
  for (const Cone& c : f.maximal) {
    if (!c.simplicial()) return false;  // non-simplicial
    if (multiplicity(c) != 1) return false;
  }
  return true;
}

bool fan_contains(const Fan& f, const Vec3& v) {
  require_height_one(f);
  if (v[0] <= 0) return v[0] == 0 && v[1] == 0 && v[2] == 0;
  // v/v0 must land in some cone's slice polygon; clear denominators.
  for (const Cone& c : f.maximal) {
    if (c.dim() < 3) continue;
    std::vector<Vec2> poly;
    for (const Vec3& g : c.generators) poly.push_back(Vec2(g[1] * v[0], g[2] * v[0]));
    if (locate_in_polygon(poly, Vec2(v[1], v[2])) != PolygonPosition::Outside) return true;
  }
  return false;
}

Fan star_subdivision(const Fan& f, const Vec3& v) {
  require_height_one(f);
  if (gcd_all(v) != 1) throw InvalidInputError("subdivision center must be primitive");
  if (f.has_ray(v)) return f;
  if (!fan_contains(f, v)) throw InvalidInputError("subdivision center outside fan support");
  if (v[0] != 1) throw InvalidInputError("subdivision center off the height-1 hyperplane");
  const Vec2 vp(v[1], v[2]);

  Fan out;
  for (const Cone& c : f.maximal) {
    std::vector<Vec2> poly = slice_points(c);
    if (locate_in_polygon(poly, vp) == PolygonPosition::Outside) {
      out.maximal.push_back(c);
      continue;
    }
    // replace by joins of v with the facets not containing v
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = poly[i];
      const Vec2& b = poly[(i + 1) % n];
      if (on_segment(a, b, vp)) continue;
      out.maximal.push_back(
          make_cone({v, c.generators[i], c.generators[(i + 1) % n]}));
    }
  }
  return out;
}

bool fan_faces_valid(const Fan& f) {
  require_height_one(f);
  const std::size_t n = f.maximal.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Vec2> pi = slice_points(f.maximal[i]);
      std::vector<Vec2> pj = slice_points(f.maximal[j]);
      // common generators
      std::vector<Vec2> shared;
      for (const Vec2& a : pi)
        for (const Vec2& b : pj)
          if (vec_eq(a, b)) shared.push_back(a);
      std::vector<RPoint> inter = polygon_intersection(pi, pj);
      if (shared.empty()) {
        if (!inter.empty()) return false;
      } else if (shared.size() == 1) {
        if (inter.size() != 1) return false;
        if (inter[0][0] != Rational(shared[0][0]) || inter[0][1] != Rational(shared[0][1]))
          return false;
      } else if (shared.size() == 2) {
        if (inter.size() != 2) return false;
        auto match = [&](const RPoint& r, const Vec2& s) {
          return r[0] == Rational(s[0]) && r[1] == Rational(s[1]);
        };
        bool ok = (match(inter[0], shared[0]) && match(inter[1], shared[1])) ||
                  (match(inter[0], shared[1]) && match(inter[1], shared[0]));
        if (!ok) return false;
      } else {
        return false;  // distinct maximal cones sharing 3+ rays overlap
      }
    }
  }
  return true;
}

ToricDiagram height_one_slice(const Fan& f) {
  std::vector<Vec3> rays = f.rays();
  if (rays.empty()) throw InvalidInputError("empty fan");

  Fan normalized = f;
  bool flat = std::all_of(rays.begin(), rays.end(),
                          [](const Vec3& r) { return r[0] == 1; });
  if (!flat) {
    // find an integer functional w with <w, r> = 1 for all rays, then move it
    // to the first coordinate by a unimodular map
    RatMat a(rays.size(), 3);
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (int j = 0; j < 3; ++j) a(static_cast<Eigen::Index>(i), j) = Rational(rays[i][j]);
    // solve a * w = 1 via exact Gaussian elimination
    RatMat sys = a;
    RatVec rhs(rays.size());
    for (Eigen::Index i = 0; i < rhs.size(); ++i) rhs[i] = 1;
    // forward elimination
    int rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < sys.rows(); ++col) {
      Eigen::Index sel = -1;
      for (Eigen::Index r = rank; r < sys.rows(); ++r)
        if (sys(r, col) != 0) { sel = r; break; }
      if (sel < 0) continue;
      sys.row(rank).swap(sys.row(sel));
      std::swap(rhs[rank], rhs[sel]);
      for (Eigen::Index r = 0; r < sys.rows(); ++r) {
        if (r == rank || sys(r, col) == 0) continue;
        Rational fct = sys(r, col) / sys(rank, col);
        sys.row(r) -= fct * sys.row(rank);
        rhs[r] -= fct * rhs[rank];
      }
      pivot_col[rank] = col;
      ++rank;
    }
    for (Eigen::Index r = rank; r < sys.rows(); ++r)
      if (rhs[r] != 0) throw InvalidInputError("fan is not crepant-compatible");
    if (rank < 3) throw InvalidInputError("fan rays do not span the lattice");
    RatVec wq(3);
    for (int r = 0; r < rank; ++r) wq[pivot_col[r]] = rhs[r] / sys(r, pivot_col[r]);
    Vec3 w;
    for (int j = 0; j < 3; ++j) {
      if (denominator(wq[j]) != 1) throw InvalidInputError("fan is not crepant-compatible");
      w[j] = numerator(wq[j]);
    }
    Unimodular3 u = complete_to_basis_row(w);
    normalized.maximal.clear();
    for (const Cone& c : f.maximal) {
      std::vector<Vec3> gens;
      for (const Vec3& g : c.generators) gens.push_back(u.apply(g));
      normalized.maximal.push_back(make_cone(std::move(gens)));
    }
  }
  require_height_one(normalized);

  ToricDiagram d;
  std::vector<Vec2> pts;
  for (const Vec3& r : normalized.rays()) pts.push_back(slice_point(r));
  d.polygon = convex_hull_ccw(pts);

  Integer minx = pts[0][0], maxx = minx, miny = pts[0][1], maxy = miny;
  for (const Vec2& p : pts) {
    minx = std::min(minx, p[0]); maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]); maxy = std::max(maxy, p[1]);
  }
  std::set<Vec2, Vec2Less> vertex_set(d.polygon.begin(), d.polygon.end());
  for (Integer x = minx; x <= maxx; ++x) {
    for (Integer y = miny; y <= maxy; ++y) {
      Vec2 p(x, y);
      PolygonPosition pos = locate_in_polygon(d.polygon, p);
      if (pos == PolygonPosition::Outside) continue;
      PointKind kind = pos == PolygonPosition::Inside ? PointKind::Interior
                       : vertex_set.count(p)          ? PointKind::Vertex
                                                      : PointKind::Boundary;
      d.points.push_back({p, kind});
    }
  }
  std::sort(d.points.begin(), d.points.end(),
            [](const DiagramPoint& a, const DiagramPoint& b) {
              return Vec2Less{}(a.p, b.p);
            });

  bool simplicial = std::all_of(normalized.maximal.begin(), normalized.maximal.end(),
                                [](const Cone& c) { return c.simplicial(); });
  if (simplicial) {
    std::vector<std::pair<Vec2, Vec2>> edges;
    auto push_edge = [&](Vec2 a, Vec2 b) {
      if (!Vec2Less{}(a, b)) std::swap(a, b);
      for (const auto& e : edges)
        if (vec_eq(e.first, a) && vec_eq(e.second, b)) return;
      edges.emplace_back(a, b);
    };
    for (const Cone& c : normalized.maximal) {
      std::vector<Vec2> tri = slice_points(c);
      for (std::size_t i = 0; i < tri.size(); ++i)
        push_edge(tri[i], tri[(i + 1) % tri.size()]);
    }
    std::sort(edges.begin(), edges.end(), [](const auto& e1, const auto& e2) {
      if (!vec_eq(e1.first, e2.first)) return Vec2Less{}(e1.first, e2.first);
      return Vec2Less{}(e1.second, e2.second);
    });
    d.edges = std::move(edges);
  }
  return d;
}

bool verify_parametrizations() {
  // toric substitution: y1 = t1/t3, y2 = t2, y3 = t1/t2, y4 = t3
  const std::array<std::array<int, 3>, 4> toric = {{{1, 0, -1}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}}};
  for (int j = 0; j < 3; ++j) {
    int y1y4 = toric[0][j] + toric[3][j];
    int y2y3 = toric[1][j] + toric[2][j];
    if (y1y4 != y2y3) return false;
  }
  // homogeneous substitution: y1 = z1 z3, y2 = z1 z4, y3 = z2 z3, y4 = z2 z4
  const std::array<std::array<int, 4>, 4> homog = {{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}};
  for (int j = 0; j < 4; ++j) {
    int y1y4 = homog[0][j] + homog[3][j];
    int y2y3 = homog[1][j] + homog[2][j];
    if (y1y4 != y2y3) return false;
  }
  // rescaling (z1, z2, z3, z4) -> (l z1, l z2, l^-1 z3, l^-1 z4) fixes each y_i
  const std::array<int, 4> lambda = {1, 1, -1, -1};
  for (int i = 0; i < 4; ++i) {
    int e = 0;
    for (int j = 0; j < 4; ++j) e += homog[i][j] * lambda[j];
    if (e != 0) return false;
  }
  return true;
}

}  // namespace hyperfan

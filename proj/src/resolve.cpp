#include "hyperfan/resolve.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyperfan {

namespace {

bool triangle_less(const Triangle& a, const Triangle& b) {
  for (int i = 0; i < 3; ++i) {
    if (!vec_eq(a[i], b[i])) return Vec2Less{}(a[i], b[i]);
  }
  return false;
}

void validate_resolution(const Resolution& r) {
  const std::int64_t n = r.base.n;
  if (static_cast<std::int64_t>(r.fan.maximal.size()) != 2 * n)
    throw DomainError("resolution does not have 2n maximal cones");
  if (!is_smooth(r.fan)) throw DomainError("resolution fan is not smooth");
  for (const Vec3& ray : r.fan.rays())
    if (ray[0] != 1) throw DomainError("resolution ray off height 1");
  if (!fan_faces_valid(r.fan)) throw DomainError("resolution fan faces are inconsistent");
}

}  // namespace

Triangle canonical_triangle(const Vec2& a, const Vec2& b, const Vec2& c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end(), Vec2Less{});
  return t;
}

std::vector<Triangle> Resolution::triangles() const {
  std::vector<Triangle> out;
  for (const Cone& c : fan.maximal) {
    if (c.generators.size() != 3) throw DomainError("resolution cone is not simplicial");
    out.push_back(canonical_triangle(Vec2(c.generators[0][1], c.generators[0][2]),
                                     Vec2(c.generators[1][1], c.generators[1][2]),
                                     Vec2(c.generators[2][1], c.generators[2][2])));
  }
  std::sort(out.begin(), out.end(), triangle_less);
  return out;
}

std::vector<Vec3> Resolution::interior_rays() const {
  ToricDiagram d = height_one_slice(fan);
  std::set<Vec2, Vec2Less> interior;
  for (const DiagramPoint& p : d.points)
    if (p.kind == PointKind::Interior) interior.insert(p.p);
  std::vector<Vec3> out;
  for (const Vec3& ray : fan.rays())
    if (interior.count(Vec2(ray[1], ray[2]))) out.push_back(ray);
  std::sort(out.begin(), out.end(), [](const Vec3& a, const Vec3& b) {
    if (a[2] != b[2]) return a[2] < b[2];  // ascending m, then l
    return a[1] < b[1];
  });
  return out;
}

bool same_triangulation(const Resolution& a, const Resolution& b) {
  return a.triangles() == b.triangles();
}

std::vector<Vec3> interior_points(const HyperconifoldClass& c) {
  std::vector<Vec3> out;
  for (std::int64_t m = 1; m < c.n; ++m) {
    std::int64_t l = (c.k * m) / c.n + 1;  // unique integer in (k m / n, 1 + k m / n)
    out.push_back(Vec3(Integer(1), Integer(l), Integer(m)));
  }
  return out;
}

Resolution crepant_resolution(const HyperconifoldClass& c,
                              const std::optional<std::vector<int>>& order) {
  std::vector<Vec3> pts = interior_points(c);
  if (pts.empty())
    throw DomainError("no interior points; use enumerate for small resolutions");
  std::vector<Vec3> sequence;
  if (order) {
    if (order->size() != pts.size())
      throw InvalidInputError("subdivision order must permute 1..n-1");
    std::vector<bool> seen(pts.size(), false);
    for (int idx : *order) {
      if (idx < 1 || idx > static_cast<int>(pts.size()) || seen[static_cast<std::size_t>(idx - 1)])
        throw InvalidInputError("subdivision order must permute 1..n-1");
      seen[static_cast<std::size_t>(idx - 1)] = true;
      sequence.push_back(pts[static_cast<std::size_t>(idx - 1)]);
    }
  } else {
    sequence = pts;
  }

  Resolution r;
  r.base = c;
  r.fan = hyperconifold_fan(c);
  for (const Vec3& v : sequence) {
    r.fan = star_subdivision(r.fan, v);
    r.history.push_back(v);
  }
  r.built_by_star_sequence = true;
  validate_resolution(r);
  return r;
}

namespace {

struct DirEdge {
  Vec2 a, b;
  bool operator<(const DirEdge& o) const {
    if (!vec_eq(a, o.a)) return Vec2Less{}(a, o.a);
    return Vec2Less{}(b, o.b);
  }
};

struct EnumerationContext {
  std::vector<Vec2> points;
  std::vector<Vec2> hull;                  // ccw
  std::set<DirEdge> boundary_ccw;          // unit boundary edges, interior on the left
  std::vector<std::array<int, 3>> candidates;  // ccw index triples, |area| = 1/2
  std::vector<std::vector<int>> by_edge;   // candidate ids per directed edge id
  std::map<DirEdge, int> edge_ids;
  std::vector<std::vector<Triangle>> results;
};

int edge_id(EnumerationContext& ctx, const DirEdge& e) {
  auto it = ctx.edge_ids.find(e);
  if (it != ctx.edge_ids.end()) return it->second;
  int id = static_cast<int>(ctx.edge_ids.size());
  ctx.edge_ids.emplace(e, id);
  ctx.by_edge.emplace_back();
  return id;
}

void search(EnumerationContext& ctx, std::vector<int>& chosen, std::set<DirEdge>& demands) {
  if (demands.empty()) {
    std::vector<Triangle> tri;
    for (int id : chosen) {
      const auto& c = ctx.candidates[static_cast<std::size_t>(id)];
      tri.push_back(canonical_triangle(ctx.points[static_cast<std::size_t>(c[0])],
                                       ctx.points[static_cast<std::size_t>(c[1])],
                                       ctx.points[static_cast<std::size_t>(c[2])]));
    }
    std::sort(tri.begin(), tri.end(), triangle_less);
    ctx.results.push_back(std::move(tri));
    return;
  }
  DirEdge e = *demands.begin();
  auto it = ctx.edge_ids.find(e);
  if (it == ctx.edge_ids.end()) return;  // no candidate covers this side
  for (int cid : ctx.by_edge[static_cast<std::size_t>(it->second)]) {
    const auto& cand = ctx.candidates[static_cast<std::size_t>(cid)];
    std::array<Vec2, 3> ct{ctx.points[static_cast<std::size_t>(cand[0])],
                           ctx.points[static_cast<std::size_t>(cand[1])],
                           ctx.points[static_cast<std::size_t>(cand[2])]};
    bool ok = true;
    for (int prev : chosen) {
      const auto& p = ctx.candidates[static_cast<std::size_t>(prev)];
      std::array<Vec2, 3> pt{ctx.points[static_cast<std::size_t>(p[0])],
                             ctx.points[static_cast<std::size_t>(p[1])],
                             ctx.points[static_cast<std::size_t>(p[2])]};
      if (triangles_interior_overlap(ct, pt)) { ok = false; break; }
    }
    if (!ok) continue;

    std::vector<DirEdge> added, removed;
    std::set<DirEdge> next = demands;
    for (int i = 0; i < 3; ++i) {
      DirEdge de{ct[static_cast<std::size_t>(i)], ct[static_cast<std::size_t>((i + 1) % 3)]};
      if (next.erase(de)) continue;               // satisfied an open demand
      if (ctx.boundary_ccw.count(de)) continue;   // polygon boundary, outside on the right
      next.insert(DirEdge{de.b, de.a});           // other side still to cover
    }
    chosen.push_back(cid);
    search(ctx, chosen, next);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Resolution> enumerate_crepant_resolutions(const HyperconifoldClass& c,
                                                      std::int64_t bound) {
  if (c.n > bound)
    throw ResourceBoundError("triangulation enumeration is limited to n <= " +
                             std::to_string(bound));
  ToricDiagram d = diagram_of(c.n, c.k);

  EnumerationContext ctx;
  for (const DiagramPoint& p : d.points) ctx.points.push_back(p.p);
  ctx.hull = d.polygon;

  // unit boundary edges in ccw direction
  const std::size_t hn = ctx.hull.size();
  for (std::size_t i = 0; i < hn; ++i) {
    const Vec2& a = ctx.hull[i];
    const Vec2& b = ctx.hull[(i + 1) % hn];
    std::vector<Vec2> on_edge;
    for (const Vec2& p : ctx.points)
      if (on_segment(a, b, p)) on_edge.push_back(p);
    std::sort(on_edge.begin(), on_edge.end(), [&](const Vec2& p, const Vec2& q) {
      Integer dp = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]);
      Integer dq = (q[0] - a[0]) * (b[0] - a[0]) + (q[1] - a[1]) * (b[1] - a[1]);
      return dp < dq;
    });
    for (std::size_t j = 0; j + 1 < on_edge.size(); ++j)
      ctx.boundary_ccw.insert(DirEdge{on_edge[j], on_edge[j + 1]});
  }

  // candidate triangles: ccw triples of lattice points with doubled area 1
  const int np = static_cast<int>(ctx.points.size());
  for (int i = 0; i < np; ++i) {
    for (int j = i + 1; j < np; ++j) {
      for (int k = j + 1; k < np; ++k) {
        Integer o = orient2(ctx.points[static_cast<std::size_t>(i)],
                            ctx.points[static_cast<std::size_t>(j)],
                            ctx.points[static_cast<std::size_t>(k)]);
        if (o != 1 && o != -1) continue;
        std::array<int, 3> t = o > 0 ? std::array<int, 3>{i, j, k} : std::array<int, 3>{i, k, j};
        int cid = static_cast<int>(ctx.candidates.size());
        ctx.candidates.push_back(t);
        for (int s = 0; s < 3; ++s) {
          DirEdge de{ctx.points[static_cast<std::size_t>(t[static_cast<std::size_t>(s)])],
                     ctx.points[static_cast<std::size_t>(t[static_cast<std::size_t>((s + 1) % 3)])]};
          ctx.by_edge[static_cast<std::size_t>(edge_id(ctx, de))].push_back(cid);
        }
      }
    }
  }

  // seed demand: the first boundary edge
  std::set<DirEdge> demands{*ctx.boundary_ccw.begin()};
  std::vector<int> chosen;
  search(ctx, chosen, demands);

  std::sort(ctx.results.begin(), ctx.results.end(),
            [](const std::vector<Triangle>& a, const std::vector<Triangle>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                  triangle_less);
            });
  ctx.results.erase(std::unique(ctx.results.begin(), ctx.results.end()), ctx.results.end());

  std::vector<Resolution> out;
  for (const std::vector<Triangle>& tris : ctx.results) {
    if (static_cast<std::int64_t>(tris.size()) != 2 * c.n) continue;
    Resolution r;
    r.base = c;
    for (const Triangle& t : tris) {
      r.fan.maximal.push_back(make_cone({Vec3(Integer(1), t[0][0], t[0][1]),
                                         Vec3(Integer(1), t[1][0], t[1][1]),
                                         Vec3(Integer(1), t[2][0], t[2][1])}));
    }
    r.built_by_star_sequence = false;
    validate_resolution(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::int64_t euler_number(const Resolution& r) {
  return static_cast<std::int64_t>(r.fan.maximal.size());
}

}  // namespace hyperfan

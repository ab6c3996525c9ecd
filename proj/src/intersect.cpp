#include "hyperfan/intersect.hpp"

#include <algorithm>
#include <set>

namespace hyperfan {

namespace {

Vec2 slice(const Vec3& r) { return Vec2(r[1], r[2]); }

// edge lies on the boundary of the (convex, ccw) polygon?
bool edge_on_boundary(const std::vector<Vec2>& hull, const Vec2& a, const Vec2& b) {
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (on_segment(hull[i], hull[(i + 1) % n], a) &&
        on_segment(hull[i], hull[(i + 1) % n], b))
      return true;
  }
  return false;
}

// ccw angular comparison of nonzero direction vectors around the origin
bool angle_less(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Integer cr = det2(a, b);
  if (cr != 0) return cr > 0;
  throw DomainError("parallel directions in a star fan");
}

std::map<Vec3, std::size_t, Vec3Less> variable_index(const std::vector<Vec3>& vars) {
  std::map<Vec3, std::size_t, Vec3Less> idx;
  for (std::size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;
  return idx;
}

}  // namespace

std::vector<Wall> walls_of(const Resolution& r) {
  struct Key {
    Vec3 a, b;
    bool operator<(const Key& o) const {
      if (!vec_eq(a, o.a)) return Vec3Less{}(a, o.a);
      return Vec3Less{}(b, o.b);
    }
  };
  std::map<Key, std::vector<int>> shared;
  for (std::size_t ci = 0; ci < r.fan.maximal.size(); ++ci) {
    const Cone& c = r.fan.maximal[ci];
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
      for (std::size_t j = i + 1; j < c.generators.size(); ++j) {
        Vec3 a = c.generators[i], b = c.generators[j];
        if (Vec3Less{}(b, a)) std::swap(a, b);
        shared[Key{a, b}].push_back(static_cast<int>(ci));
      }
    }
  }
  ToricDiagram d = height_one_slice(r.fan);
  std::vector<Wall> out;
  for (const auto& [key, cones] : shared) {
    Wall w;
    w.r1 = key.a;
    w.r2 = key.b;
    w.cone_a = cones[0];
    w.cone_b = cones.size() > 1 ? cones[1] : -1;
    w.compact = !edge_on_boundary(d.polygon, slice(key.a), slice(key.b));
    if (w.compact && cones.size() != 2)
      throw DomainError("interior wall without exactly two adjacent cones");
    if (!w.compact && cones.size() != 1)
      throw DomainError("boundary wall with more than one adjacent cone");
    out.push_back(w);
  }
  return out;
}

WallRelation wall_relation(const Resolution& r, const Wall& w) {
  if (!w.compact) throw DomainError("curve is non-compact; no pairing table");
  auto opposite = [&](int cone_idx) {
    const Cone& c = r.fan.maximal[static_cast<std::size_t>(cone_idx)];
    for (const Vec3& g : c.generators)
      if (!vec_eq(g, w.r1) && !vec_eq(g, w.r2)) return g;
    throw DomainError("wall cone has no opposite ray");
  };
  Vec3 u = opposite(w.cone_a);
  Vec3 up = opposite(w.cone_b);
  // u' = p w1 + q w2 + s u with (w1, w2, u) a lattice basis; smoothness
  // forces s = -1 and the relation u + u' + a w1 + b w2 = 0.
  Integer den = det3(w.r1, w.r2, u);
  if (den != 1 && den != -1) throw DomainError("wall frame is not a lattice basis");
  Integer p = det3(up, w.r2, u) / den;
  Integer q = det3(w.r1, up, u) / den;
  Integer s = det3(w.r1, w.r2, up) / den;
  if (s != -1) throw DomainError("adjacent cones do not lie on opposite sides of the wall");
  WallRelation rel;
  rel.a = -p;
  rel.b = -q;
  rel.u = u;
  rel.u_prime = up;
  Vec3 check = u + up + rel.a * w.r1 + rel.b * w.r2;
  if (check[0] != 0 || check[1] != 0 || check[2] != 0)
    throw DomainError("wall relation failed to close");
  for (const Vec3& ray : r.fan.rays()) rel.pairing[ray] = 0;
  rel.pairing[u] += 1;
  rel.pairing[up] += 1;
  rel.pairing[w.r1] += rel.a;
  rel.pairing[w.r2] += rel.b;
  return rel;
}

ConeDescription local_ample_cone(const Resolution& r) {
  ConeDescription cd;
  cd.variables = r.interior_rays();
  auto idx = variable_index(cd.variables);
  for (const Wall& w : walls_of(r)) {
    if (!w.compact) continue;
    WallRelation rel = wall_relation(r, w);
    std::vector<Integer> row(cd.variables.size(), Integer(0));
    for (const auto& [ray, coeff] : rel.pairing) {
      auto it = idx.find(ray);
      if (it != idx.end()) row[it->second] = coeff;
    }
    cd.inequalities.push_back(std::move(row));
  }
  if (cd.variables.empty()) {
    cd.no_local_divisors = true;
    cd.nonempty = false;
    return cd;
  }
  StrictFeasibility fs = strictly_feasible(cd.inequalities, cd.variables.size());
  cd.nonempty = fs.feasible;
  cd.witness = std::move(fs.witness);
  return cd;
}

std::vector<Resolution> projective_resolutions(const HyperconifoldClass& c, std::int64_t bound) {
  std::vector<Resolution> out;
  for (Resolution& r : enumerate_crepant_resolutions(c, bound)) {
    if (local_ample_cone(r).nonempty) out.push_back(std::move(r));
  }
  return out;
}

std::vector<ExceptionalSurface> exceptional_surfaces(const Resolution& r) {
  std::vector<ExceptionalSurface> out;
  std::vector<Wall> walls = walls_of(r);
  for (const Vec3& center : r.interior_rays()) {
    ExceptionalSurface s;
    s.center = center;
    std::vector<std::pair<Vec2, Vec3>> nbrs;
    for (const Wall& w : walls) {
      if (vec_eq(w.r1, center)) nbrs.emplace_back(Vec2(slice(w.r2) - slice(center)), w.r2);
      else if (vec_eq(w.r2, center)) nbrs.emplace_back(Vec2(slice(w.r1) - slice(center)), w.r1);
    }
    std::sort(nbrs.begin(), nbrs.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    const std::size_t m = nbrs.size();
    for (const auto& [dir, ray] : nbrs) {
      s.cycle_rays.push_back(dir);
      s.cycle_neighbors.push_back(ray);
    }
    // self-intersections from the 2D star fan: u_{i-1} + u_{i+1} = a u_i, C^2 = -a
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2& prev = s.cycle_rays[(i + m - 1) % m];
      const Vec2& next = s.cycle_rays[(i + 1) % m];
      const Vec2& cur = s.cycle_rays[i];
      Vec2 sum = prev + next;
      if (det2(sum, cur) != 0)
        throw DomainError("star fan wall relation failed (non-smooth surface?)");
      Integer a;
      if (cur[0] != 0) a = sum[0] / cur[0];
      else a = sum[1] / cur[1];
      if (!vec_eq(Vec2(a * cur), sum)) throw DomainError("star fan relation is not integral");
      s.self_intersections.push_back(-a);
    }
    // consecutive star rays must span unit cells (the surface is smooth)
    for (std::size_t i = 0; i < m; ++i) {
      Integer d = det2(s.cycle_rays[i], s.cycle_rays[(i + 1) % m]);
      if (d != 1) throw DomainError("star fan of an interior ray is not smooth/complete");
    }
    // label by the self-intersection cycle up to rotation and reflection
    auto cyclic_matches = [&](const std::vector<Integer>& pat) {
      const std::size_t len = s.self_intersections.size();
      if (pat.size() != len) return false;
      for (int refl = 0; refl < 2; ++refl) {
        std::vector<Integer> c = s.self_intersections;
        if (refl) std::reverse(c.begin(), c.end());
        for (std::size_t rot = 0; rot < len; ++rot) {
          bool ok = true;
          for (std::size_t i = 0; i < len; ++i)
            if (c[(i + rot) % len] != pat[i]) { ok = false; break; }
          if (ok) return true;
        }
      }
      return false;
    };
    if (cyclic_matches({Integer(1), Integer(1), Integer(1)})) {
      s.label = "P2";
    } else {
      bool labeled = false;
      if (m == 4) {
        for (Integer a = 0; a <= 64 && !labeled; ++a) {
          if (cyclic_matches({Integer(0), a, Integer(0), Integer(-a)})) {
            s.label = "F" + a.str();
            labeled = true;
          }
        }
      }
      if (!labeled) {
        std::string cyc;
        for (std::size_t i = 0; i < m; ++i)
          cyc += (i ? "," : "") + s.self_intersections[i].str();
        s.label = "smooth toric surface, cycle (" + cyc + ")";
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

IntersectionTensor triple_intersections(const Resolution& r) {
  std::vector<Vec3> vars = r.interior_rays();
  auto idx = variable_index(vars);
  IntersectionTensor t;
  t.size = vars.size();
  t.d.assign(t.size * t.size * t.size, Integer(0));
  std::vector<ExceptionalSurface> surfaces = exceptional_surfaces(r);

  // distinct alpha, beta, gamma: cones containing all three rays
  for (std::size_t i = 0; i < t.size; ++i)
    for (std::size_t j = i + 1; j < t.size; ++j)
      for (std::size_t k = j + 1; k < t.size; ++k) {
        Integer count(0);
        for (const Cone& c : r.fan.maximal) {
          int hit = 0;
          for (const Vec3& g : c.generators)
            if (vec_eq(g, vars[i]) || vec_eq(g, vars[j]) || vec_eq(g, vars[k])) ++hit;
          if (hit == 3) ++count;
        }
        for (std::size_t a : {i, j, k})
          for (std::size_t b : {i, j, k})
            for (std::size_t c2 : {i, j, k})
              if (a != b && b != c2 && a != c2) t.at(a, b, c2) = count;
      }

  // pairs d_{a a b} = (E_a|_{S_b})^2 in the star surface of b
  for (std::size_t b = 0; b < t.size; ++b) {
    const ExceptionalSurface& s = surfaces[b];
    for (std::size_t pos = 0; pos < s.cycle_neighbors.size(); ++pos) {
      auto it = idx.find(s.cycle_neighbors[pos]);
      if (it == idx.end()) continue;
      std::size_t a = it->second;
      t.at(a, a, b) = t.at(a, b, a) = t.at(b, a, a) = s.self_intersections[pos];
    }
  }

  // d_{aaa} = K^2 of the star surface: sum of cycle self-intersections + 2 * length
  for (std::size_t a = 0; a < t.size; ++a) {
    const ExceptionalSurface& s = surfaces[a];
    Integer k2(2 * static_cast<std::int64_t>(s.self_intersections.size()));
    for (const Integer& c : s.self_intersections) k2 += c;
    t.at(a, a, a) = k2;
  }
  return t;
}

IntersectionTensor triple_intersections_oracle(const Resolution& r) {
  std::vector<Vec3> vars = r.interior_rays();
  auto idx = variable_index(vars);
  IntersectionTensor t;
  t.size = vars.size();
  t.d.assign(t.size * t.size * t.size, Integer(0));

  std::vector<Wall> walls = walls_of(r);
  // interior-interior walls give E_a . E_b = [C_w]; pair with every divisor
  std::map<std::pair<std::size_t, std::size_t>, WallRelation> interior_walls;
  for (const Wall& w : walls) {
    if (!w.compact) continue;
    auto i1 = idx.find(w.r1), i2 = idx.find(w.r2);
    if (i1 == idx.end() || i2 == idx.end()) continue;
    interior_walls.emplace(std::minmax(i1->second, i2->second), wall_relation(r, w));
  }
  std::vector<bool> seen(t.size * t.size * t.size, false);
  auto set_checked = [&](std::size_t i, std::size_t j, std::size_t k, const Integer& v) {
    std::array<std::size_t, 3> s{i, j, k};
    std::sort(s.begin(), s.end());
    std::size_t flat = (s[0] * t.size + s[1]) * t.size + s[2];
    if (seen[flat]) {
      if (t.at(s[0], s[1], s[2]) != v)
        throw DomainError("intersection oracle: inconsistent wall pairings");
      return;
    }
    seen[flat] = true;
    const std::size_t perm[6][3] = {{s[0], s[1], s[2]}, {s[0], s[2], s[1]}, {s[1], s[0], s[2]},
                                    {s[1], s[2], s[0]}, {s[2], s[0], s[1]}, {s[2], s[1], s[0]}};
    for (const auto& p : perm) t.at(p[0], p[1], p[2]) = v;
  };

  for (const auto& [ab, rel] : interior_walls) {
    auto [a, b] = ab;
    for (const auto& [ray, coeff] : rel.pairing) {
      auto ir = idx.find(ray);
      if (ir == idx.end()) continue;
      set_checked(a, b, ir->second, coeff);
    }
  }
  // non-adjacent interior pairs: E_a E_b = 0
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = a + 1; b < t.size; ++b)
      if (!interior_walls.count({a, b}))
        for (std::size_t g = 0; g < t.size; ++g) set_checked(a, b, g, Integer(0));

  // d_{aaa} from linear equivalence: all rays have height 1, so
  // sum_rho D_rho ~ 0 and E_a E_a (sum_rho D_rho) = 0.
  for (std::size_t a = 0; a < t.size; ++a) {
    Integer acc(0);
    for (const Wall& w : walls) {
      if (!w.compact) continue;
      bool has_a = vec_eq(w.r1, vars[a]) || vec_eq(w.r2, vars[a]);
      if (!has_a) continue;
      WallRelation rel = wall_relation(r, w);
      // E_a E_a D_rho where rho is the wall's other ray = pairing of E_a on C_w
      acc += rel.pairing.at(vars[a]);
    }
    set_checked(a, a, a, -acc);
  }
  return t;
}

bool adjunction_check(const Resolution& r) {
  std::vector<Vec3> vars = r.interior_rays();
  auto idx = variable_index(vars);
  std::vector<ExceptionalSurface> surfaces = exceptional_surfaces(r);
  for (const Wall& w : walls_of(r)) {
    if (!w.compact) continue;
    WallRelation rel = wall_relation(r, w);
    for (int side = 0; side < 2; ++side) {
      const Vec3& center = side == 0 ? w.r1 : w.r2;
      const Vec3& other = side == 0 ? w.r2 : w.r1;
      auto it = idx.find(center);
      if (it == idx.end()) continue;  // curve not in an exceptional surface
      const ExceptionalSurface& s = surfaces[it->second];
      Integer c2;
      bool found = false;
      for (std::size_t pos = 0; pos < s.cycle_neighbors.size(); ++pos) {
        if (vec_eq(s.cycle_neighbors[pos], other)) {
          c2 = s.self_intersections[pos];
          found = true;
          break;
        }
      }
      if (!found) throw DomainError("wall curve missing from its star fan");
      if (rel.pairing.at(center) != Integer(-2) - c2) return false;
    }
  }
  return true;
}

std::vector<Vec2> cone2_extreme_rays(const std::vector<std::vector<Integer>>& rows) {
  std::vector<Vec2> rays;
  auto satisfies_all = [&](const Vec2& v) {
    for (const auto& row : rows) {
      if (row.size() != 2) throw InvalidInputError("cone2_extreme_rays needs 2 variables");
      if (row[0] * v[0] + row[1] * v[1] < 0) return false;
    }
    return true;
  };
  for (const auto& row : rows) {
    if (row[0] == 0 && row[1] == 0) continue;
    for (int sign : {1, -1}) {
      Vec2 dir(-sign * row[1], sign * row[0]);
      if (!satisfies_all(dir)) continue;
      Vec2 p = primitive_of(dir);
      bool dup = false;
      for (const Vec2& q : rays)
        if (vec_eq(p, q)) dup = true;
      if (!dup) rays.push_back(p);
    }
  }
  std::sort(rays.begin(), rays.end(), Vec2Less{});
  return rays;
}

}  // namespace hyperfan

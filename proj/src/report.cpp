#include "hyperfan/report.hpp"

#include <cstdio>

namespace hyperfan {

Json json_int(const Integer& x) { return to_int64(x); }

Json json_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string decimal12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Json to_json(const Vec2& v) { return Json::array({json_int(v[0]), json_int(v[1])}); }

Json to_json(const Vec3& v) {
  return Json::array({json_int(v[0]), json_int(v[1]), json_int(v[2])});
}

Json to_json(const HyperconifoldClass& c) {
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["orbit"] = c.orbit;
  j["conifold"] = c.is_conifold();
  j["lens_space"] = "L(" + std::to_string(c.n) + "," + std::to_string(c.k) + ")";
  return j;
}

Json to_json(const ToricDiagram& d) {
  Json j;
  j["vertices"] = Json::array();
  for (const Vec2& v : d.polygon) j["vertices"].push_back(to_json(v));
  j["lattice_area"] = json_int(d.lattice_area_twice() / 2);
  j["points"] = Json::array();
  for (const DiagramPoint& p : d.points) {
    Json pj;
    pj["p"] = to_json(p.p);
    pj["kind"] = p.kind == PointKind::Vertex     ? "vertex"
                 : p.kind == PointKind::Boundary ? "boundary"
                                                 : "interior";
    j["points"].push_back(pj);
  }
  if (!d.edges.empty()) {
    j["edges"] = Json::array();
    for (const auto& e : d.edges)
      j["edges"].push_back(Json::array({to_json(e.first), to_json(e.second)}));
  }
  return j;
}

Json to_json(const ConeDescription& cd) {
  Json j;
  j["variables"] = Json::array();
  for (const Vec3& v : cd.variables) j["variables"].push_back(to_json(v));
  j["inequalities"] = Json::array();
  for (const auto& row : cd.inequalities) {
    Json r = Json::array();
    for (const Integer& c : row) r.push_back(json_int(c));
    j["inequalities"].push_back(r);
  }
  j["nonempty"] = cd.nonempty;
  if (cd.nonempty) {
    Json w = Json::array();
    for (const Rational& q : cd.witness) w.push_back(json_rational(q));
    j["witness"] = w;
  }
  if (cd.no_local_divisors) j["note"] = "no local ample divisors";
  return j;
}

Json to_json(const ExceptionalSurface& s) {
  Json j;
  j["center"] = to_json(s.center);
  j["label"] = s.label;
  Json cyc = Json::array();
  for (const Integer& c : s.self_intersections) cyc.push_back(json_int(c));
  j["self_intersections"] = cyc;
  Json rays = Json::array();
  for (const Vec2& r : s.cycle_rays) rays.push_back(to_json(r));
  j["star_rays"] = rays;
  return j;
}

Json to_json(const IntersectionTensor& t, const std::vector<Vec3>& divisors) {
  Json j;
  j["divisors"] = Json::array();
  for (const Vec3& d : divisors) j["divisors"].push_back(to_json(d));
  Json entries = Json::array();
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = a; b < t.size; ++b)
      for (std::size_t c = b; c < t.size; ++c) {
        Json e;
        e["indices"] = Json::array({a + 1, b + 1, c + 1});
        e["value"] = json_int(t.at(a, b, c));
        entries.push_back(e);
      }
  j["entries"] = entries;
  return j;
}

Json resolution_report(const Resolution& r, int index) {
  Json j;
  j["index"] = index;
  j["cone_count"] = static_cast<std::int64_t>(r.fan.maximal.size());
  j["smooth"] = is_smooth(r.fan);
  j["euler_number"] = euler_number(r);
  j["built_by_star_sequence"] = r.built_by_star_sequence;
  if (!r.history.empty()) {
    Json h = Json::array();
    for (const Vec3& v : r.history) h.push_back(to_json(v));
    j["history"] = h;
  }
  Json tris = Json::array();
  for (const Triangle& t : r.triangles())
    tris.push_back(Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}));
  j["triangles"] = tris;

  ConeDescription cd = local_ample_cone(r);
  j["local_ample_cone"] = to_json(cd);
  j["projective"] = cd.nonempty;

  Json surf = Json::array();
  for (const ExceptionalSurface& s : exceptional_surfaces(r)) surf.push_back(to_json(s));
  j["exceptional_surfaces"] = surf;

  j["triple_intersections"] = to_json(triple_intersections(r), r.interior_rays());
  return j;
}

Json to_json(const MirrorGeometry& g) {
  Json j;
  j["n"] = g.n;
  j["k"] = g.k;
  Json terms = Json::array();
  for (const LaurentTerm& t : g.f) {
    Json tj;
    tj["coeff"] = json_int(t.coeff);
    tj["x_exp"] = t.ex;
    tj["y_exp"] = t.ey;
    terms.push_back(tj);
  }
  j["f"] = terms;
  j["factors"] = Json::array({"1 + x", "1 + x^" + std::to_string(g.k) + " y^" + std::to_string(g.n)});
  return j;
}

Json to_json(const NodeCertificate& n) {
  Json j;
  j["u"] = "0";
  j["v"] = "0";
  j["x"] = "-1";
  j["y_turns"] = json_rational(n.y_turns);
  j["y"] = Json::array({decimal12(n.y.real()), decimal12(n.y.imag())});
  j["hessian_det"] =
      Json::array({decimal12(n.hessian_det.real()), decimal12(n.hessian_det.imag())});
  j["nondegenerate"] = n.nondegenerate;
  j["exact_residuals"] = n.exact_residuals;
  return j;
}

Json to_json(const ExchangeAction& a) {
  Json j;
  j["n"] = a.n;
  j["k"] = a.k;
  j["order"] = a.order;
  j["p_phase"] = a.p_phase;
  j["omega_phase"] = a.omega_phase;
  j["map"] = a.map_text;
  return j;
}

Json to_json(const MatrixIdentification& m) {
  Json j;
  j["order"] = m.order;
  j["exponents"] = m.exponents;
  j["class"] = to_json(m.cls);
  return j;
}

Json to_json(const TransitionReport& t) {
  Json j;
  j["class"] = to_json(t.cls);
  Json before;
  before["h11"] = t.before.h11;
  before["h21"] = t.before.h21;
  before["group"] = t.group_label;
  before["group_order"] = t.group_order;
  j["before"] = before;
  Json after;
  after["h11"] = t.after.h11;
  after["h21"] = t.after.h21;
  after["pi1"] = t.pi1_label;
  after["pi1_order"] = t.pi1_order;
  j["after"] = after;
  j["euler_change"] = t.euler_change;
  j["normal_closure_order"] = t.normal_closure_order;
  j["triple_intersections"] = to_json(t.tensor, t.tensor_divisors);
  j["symbolic"] = t.symbolic;
  return j;
}

Json envelope(const std::string& command, Json inputs, Json payload,
              std::vector<std::string> warnings) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["schema_version"] = 1;
  j["payload"] = std::move(payload);
  j["warnings"] = warnings;
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hyperfan

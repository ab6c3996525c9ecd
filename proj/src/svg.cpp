#include "hyperfan/svg.hpp"

#include <sstream>

#include "hyperfan/lattice.hpp"

namespace hyperfan {

namespace {

constexpr int kSpacing = 40;
constexpr int kDotRadius = 4;
constexpr int kPolygonStroke = 2;
constexpr int kMargin = 20;

}  // namespace

std::string diagram_svg(const ToricDiagram& d) {
  std::vector<Vec2> all;
  for (const DiagramPoint& p : d.points) all.push_back(p.p);
  for (const Vec2& v : d.polygon) all.push_back(v);
  Unimodular2 shear = squaring_shear(all);

  Integer minx, maxx, miny, maxy;
  bool first = true;
  auto track = [&](const Vec2& q) {
    if (first) { minx = maxx = q[0]; miny = maxy = q[1]; first = false; return; }
    minx = std::min(minx, q[0]); maxx = std::max(maxx, q[0]);
    miny = std::min(miny, q[1]); maxy = std::max(maxy, q[1]);
  };
  for (const Vec2& p : all) track(shear.apply(p));

  auto px = [&](const Vec2& p) {
    Vec2 q = shear.apply(p);
    std::int64_t x = to_int64((q[0] - minx) * kSpacing) + kMargin;
    std::int64_t y = to_int64((maxy - q[1]) * kSpacing) + kMargin;  // SVG y grows downward
    return std::make_pair(x, y);
  };
  std::int64_t width = to_int64((maxx - minx) * kSpacing) + 2 * kMargin;
  std::int64_t height = to_int64((maxy - miny) * kSpacing) + 2 * kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < d.polygon.size(); ++i) {
    auto [x, y] = px(d.polygon[i]);
    out << (i ? " " : "") << x << "," << y;
  }
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << kPolygonStroke << "\"/>\n";

  for (const auto& e : d.edges) {
    auto [x1, y1] = px(e.first);
    auto [x2, y2] = px(e.second);
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  }

  for (const DiagramPoint& p : d.points) {
    auto [x, y] = px(p.p);
    const char* fill = p.kind == PointKind::Interior ? "black" : "white";
    out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kDotRadius
        << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hyperfan

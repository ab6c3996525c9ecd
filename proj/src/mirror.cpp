#include "hyperfan/mirror.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hyperfan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

using C2 = std::array<std::complex<double>, 2>;

std::vector<LaurentTerm> sorted_terms(std::vector<LaurentTerm> t) {
  std::sort(t.begin(), t.end(), [](const LaurentTerm& a, const LaurentTerm& b) {
    return std::make_pair(a.ex, a.ey) < std::make_pair(b.ex, b.ey);
  });
  return t;
}

// product of two Laurent polynomials, collecting exponents
std::vector<LaurentTerm> laurent_mul(const std::vector<LaurentTerm>& a,
                                     const std::vector<LaurentTerm>& b) {
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> acc;
  for (const LaurentTerm& s : a)
    for (const LaurentTerm& t : b) acc[{s.ex + t.ex, s.ey + t.ey}] += s.coeff * t.coeff;
  std::vector<LaurentTerm> out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.push_back({c, e.first, e.second});
  return sorted_terms(std::move(out));
}

}  // namespace

std::complex<double> evaluate_laurent(const std::vector<LaurentTerm>& f,
                                      const std::complex<double>& x,
                                      const std::complex<double>& y, int dx, int dy) {
  std::complex<double> acc = 0.0;
  for (const LaurentTerm& t : f) {
    double c = static_cast<double>(t.coeff);
    std::int64_t ex = t.ex, ey = t.ey;
    for (int i = 0; i < dx; ++i) c *= static_cast<double>(ex--);
    for (int i = 0; i < dy; ++i) c *= static_cast<double>(ey--);
    if (c == 0.0) continue;
    acc += c * std::pow(x, static_cast<double>(ex)) * std::pow(y, static_cast<double>(ey));
  }
  return acc;
}

MirrorGeometry mirror_polynomial(const HyperconifoldClass& c) {
  canonical_form(c.n, c.k);  // validates the pair
  MirrorGeometry g;
  g.n = c.n;
  g.k = c.k;
  g.f = sorted_terms({{Integer(1), 0, 0},
                      {Integer(1), 1, 0},
                      {Integer(1), c.k, c.n},
                      {Integer(1), c.k + 1, c.n}});
  // factorization f = (1+x)(1+x^k y^n), verified by exact expansion
  std::vector<LaurentTerm> f1 = {{Integer(1), 0, 0}, {Integer(1), 1, 0}};
  std::vector<LaurentTerm> f2 = {{Integer(1), 0, 0}, {Integer(1), c.k, c.n}};
  std::vector<LaurentTerm> prod = laurent_mul(f1, f2);
  if (prod.size() != g.f.size())
    throw DomainError("mirror polynomial does not factor as (1+x)(1+x^k y^n)");
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (prod[i].coeff != g.f[i].coeff || prod[i].ex != g.f[i].ex || prod[i].ey != g.f[i].ey)
      throw DomainError("mirror polynomial does not factor as (1+x)(1+x^k y^n)");
  }
  // Newton polygon must be the toric diagram of C_{n,k}
  std::vector<Vec2> exps;
  for (const LaurentTerm& t : g.f) exps.push_back(Vec2(Integer(t.ex), Integer(t.ey)));
  std::vector<Vec2> hull = convex_hull_ccw(exps);
  ToricDiagram d = diagram_of(c.n, c.k);
  std::vector<Vec2> ref = d.polygon;
  std::sort(hull.begin(), hull.end(), Vec2Less{});
  std::sort(ref.begin(), ref.end(), Vec2Less{});
  if (hull.size() != ref.size() ||
      !std::equal(hull.begin(), hull.end(), ref.begin(),
                  [](const Vec2& a, const Vec2& b) { return vec_eq(a, b); }))
    throw DomainError("Newton polygon differs from the toric diagram");
  return g;
}

namespace {

// d/dx (1+x) is the constant 1, and d/dy (1 + x^k y^n) is a single monomial
// with coefficient n, which cannot vanish on the torus.  So neither factor
// has a critical zero and the nodes below exhaust the singular locus.
bool factor_critical_systems_empty(std::int64_t n, std::int64_t k) {
  std::vector<LaurentTerm> f1 = {{Integer(1), 0, 0}, {Integer(1), 1, 0}};
  std::vector<LaurentTerm> df1;
  for (const LaurentTerm& t : f1)
    if (t.ex != 0) df1.push_back({t.coeff * t.ex, t.ex - 1, t.ey});
  if (df1.size() != 1 || df1[0].coeff != 1 || df1[0].ex != 0 || df1[0].ey != 0) return false;

  std::vector<LaurentTerm> f2 = {{Integer(1), 0, 0}, {Integer(1), k, n}};
  std::vector<LaurentTerm> df2;
  for (const LaurentTerm& t : f2)
    if (t.ey != 0) df2.push_back({t.coeff * t.ey, t.ex, t.ey - 1});
  return df2.size() == 1 && df2[0].coeff == n && n >= 1;
}

}  // namespace

std::vector<NodeCertificate> mirror_nodes(const MirrorGeometry& g) {
  const std::int64_t n = g.n, k = g.k;
  if (n < 1) throw DomainError("mirror geometry with non-positive n");
  if (!factor_critical_systems_empty(n, k))
    throw DomainError("factor critical system unexpectedly has solutions");

  std::vector<NodeCertificate> nodes;
  for (std::int64_t j = 0; j < n; ++j) {
    NodeCertificate cert;
    cert.root_index = j;
    // y = exp(i pi (k+1+2j)/n): as a fraction of a full turn, (k+1+2j)/(2n) mod 1
    Rational turns(mod_pos(k + 1 + 2 * j, 2 * n), 2 * n);
    cert.y_turns = turns;
    double angle = kTwoPi * static_cast<double>(turns);
    cert.y = {std::cos(angle), std::sin(angle)};

    // exact residuals: x = -1 kills f1; x^k y^n picks up the phase
    // pi*(k + (k+1+2j)) = pi*odd, so f2 = 1 + (-1) = 0
    std::int64_t phase_half_turns = k + (k + 1 + 2 * j);  // exponent of e^{i pi}
    cert.exact_residuals = mod_pos(phase_half_turns, 2) == 1;

    // Hessian of F = uv - f at (0,0,-1,y_j); F's coefficients already have
    // unit max modulus, so no normalization factor is needed
    std::complex<double> x(-1.0, 0.0);
    std::complex<double> fxx = evaluate_laurent(g.f, x, cert.y, 2, 0);
    std::complex<double> fxy = evaluate_laurent(g.f, x, cert.y, 1, 1);
    std::complex<double> fyy = evaluate_laurent(g.f, x, cert.y, 0, 2);
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    h(0, 1) = h(1, 0) = 1.0;
    h(2, 2) = -fxx;
    h(2, 3) = h(3, 2) = -fxy;
    h(3, 3) = -fyy;
    cert.hessian_det = h.determinant();
    cert.nondegenerate = std::abs(cert.hessian_det) > 1e-9;
    nodes.push_back(cert);
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const NodeCertificate& a, const NodeCertificate& b) {
              return a.y_turns < b.y_turns;
            });
  return nodes;
}

std::vector<C2> independent_node_search(const MirrorGeometry& g, int grid) {
  if (grid < 16) throw InvalidInputError("grid resolution must be at least 16");
  std::vector<C2> clusters;
  const double tol = 1e-10;
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      double ta = kTwoPi * (a + 0.5) / grid;
      double tb = kTwoPi * (b + 0.5) / grid;
      C2 z = {std::complex<double>(1.1 * std::cos(ta), 1.1 * std::sin(ta)),
              std::complex<double>(std::cos(tb), std::sin(tb))};
      bool ok = false;
      for (int it = 0; it < 80; ++it) {
        std::complex<double> fx = evaluate_laurent(g.f, z[0], z[1], 1, 0);
        std::complex<double> fy = evaluate_laurent(g.f, z[0], z[1], 0, 1);
        if (std::abs(fx) < tol && std::abs(fy) < tol) { ok = true; break; }
        Eigen::Matrix2cd jac;
        jac(0, 0) = evaluate_laurent(g.f, z[0], z[1], 2, 0);
        jac(0, 1) = evaluate_laurent(g.f, z[0], z[1], 1, 1);
        jac(1, 0) = jac(0, 1);
        jac(1, 1) = evaluate_laurent(g.f, z[0], z[1], 0, 2);
        Eigen::Vector2cd rhs(-fx, -fy);
        Eigen::Vector2cd step = jac.fullPivLu().solve(rhs);
        if (!step.allFinite()) break;
        z[0] += step[0];
        z[1] += step[1];
        if (std::abs(z[0]) < 1e-8 || std::abs(z[1]) < 1e-8 || std::abs(z[0]) > 1e8 ||
            std::abs(z[1]) > 1e8)
          break;  // left the torus
      }
      if (!ok) continue;
      if (std::abs(evaluate_laurent(g.f, z[0], z[1])) > 1e-7) continue;  // critical but not singular
      bool merged = false;
      for (const C2& c : clusters) {
        if (std::abs(c[0] - z[0]) < 1e-6 && std::abs(c[1] - z[1]) < 1e-6) {
          merged = true;
          break;
        }
      }
      if (!merged) clusters.push_back(z);
    }
  }
  std::sort(clusters.begin(), clusters.end(), [](const C2& p, const C2& q) {
    double ap = std::arg(p[1]), aq = std::arg(q[1]);
    return ap < aq;
  });
  return clusters;
}

}  // namespace hyperfan

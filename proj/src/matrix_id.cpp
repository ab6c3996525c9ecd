#include "hyperfan/matrix_id.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace hyperfan {

namespace {

using IPoly = std::vector<Integer>;  // coefficients, lowest degree first

void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly poly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// exact division by a monic divisor
IPoly poly_div_monic(IPoly num, const IPoly& den) {
  trim(num);
  if (den.empty() || den.back() != 1) throw InvalidInputError("divisor must be monic");
  if (num.size() < den.size()) {
    trim(num);
    if (!num.empty()) throw InvalidInputError("polynomial division is not exact");
    return {};
  }
  IPoly q(num.size() - den.size() + 1, Integer(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw InvalidInputError("polynomial division is not exact");
  return q;
}

IPoly poly_mod_monic(IPoly num, const IPoly& den) {
  trim(num);
  if (den.empty() || den.back() != 1) throw InvalidInputError("divisor must be monic");
  while (num.size() >= den.size()) {
    Integer c = num.back();
    std::size_t off = num.size() - den.size();
    for (std::size_t j = 0; j < den.size(); ++j) num[off + j] -= c * den[j];
    trim(num);
  }
  return num;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(std::int64_t n) {
  static std::map<std::int64_t, std::vector<Integer>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IPoly result;
  if (n == 1) {
    result = {Integer(-1), Integer(1)};  // y - 1
  } else {
    IPoly num(static_cast<std::size_t>(n) + 1, Integer(0));
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;  // y^n - 1
    for (std::int64_t d = 1; d < n; ++d) {
      if (n % d == 0) num = poly_div_monic(std::move(num), cyclotomic_polynomial(d));
    }
    result = num;
  }
  cache[n] = result;
  return result;
}

std::optional<std::int64_t> matrix_order(const Mat4& m, std::int64_t bound) {
  Mat4 id = Mat4::Identity();
  Mat4 p = m;
  for (std::int64_t j = 1; j <= bound; ++j) {
    if (p == id) return j;
    p = Mat4(p * m);
  }
  return std::nullopt;
}

std::array<Integer, 5> characteristic_polynomial(const Mat4& m) {
  // det(xI - M) by Laplace expansion over degree-1 polynomial entries
  using P = IPoly;
  std::array<std::array<P, 4>, 4> e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) e[i][j] = {Integer(-m(i, j)), Integer(1)};
      else e[i][j] = {Integer(-m(i, j))};
    }
  // 2x2 minors of rows {2,3}
  auto sub2 = [&](int c1, int c2) {
    P a = poly_mul(e[2][c1], e[3][c2]);
    P b = poly_mul(e[2][c2], e[3][c1]);
    a.resize(std::max(a.size(), b.size()), Integer(0));
    b.resize(a.size(), Integer(0));
    for (std::size_t t = 0; t < a.size(); ++t) a[t] -= b[t];
    return a;
  };
  auto sub3 = [&](int r, std::array<int, 3> cols) {
    P acc;
    int sign = 1;
    for (int idx = 0; idx < 3; ++idx) {
      std::array<int, 2> rest;
      int ri = 0;
      for (int t = 0; t < 3; ++t)
        if (t != idx) rest[ri++] = cols[t];
      P term = poly_mul(e[r][cols[idx]], sub2(rest[0], rest[1]));
      acc.resize(std::max(acc.size(), term.size()), Integer(0));
      for (std::size_t t = 0; t < term.size(); ++t)
        acc[t] += sign > 0 ? term[t] : Integer(-term[t]);
      sign = -sign;
    }
    return acc;
  };
  P det;
  int sign = 1;
  for (int c = 0; c < 4; ++c) {
    std::array<int, 3> cols;
    int ci = 0;
    for (int t = 0; t < 4; ++t)
      if (t != c) cols[ci++] = t;
    P term = poly_mul(e[0][c], sub3(1, cols));
    det.resize(std::max(det.size(), term.size()), Integer(0));
    for (std::size_t t = 0; t < term.size(); ++t)
      det[t] += sign > 0 ? term[t] : Integer(-term[t]);
    sign = -sign;
  }
  det.resize(5, Integer(0));
  std::array<Integer, 5> out;
  std::copy_n(det.begin(), 5, out.begin());
  return out;
}

namespace {

// product of (x - zeta^{a_i}) with coefficients in Z[y]/(y^n - 1); each
// x-coefficient is an exponent vector in y
std::vector<IPoly> linear_factor_product(std::int64_t n,
                                         const std::array<std::int64_t, 4>& exps) {
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<IPoly> acc = {IPoly(nn, Integer(0))};
  acc[0][0] = 1;  // constant polynomial 1
  for (std::int64_t a : exps) {
    std::vector<IPoly> next(acc.size() + 1, IPoly(nn, Integer(0)));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      // times x
      for (std::size_t t = 0; t < nn; ++t) next[i + 1][t] += acc[i][t];
      // times -zeta^a
      for (std::size_t t = 0; t < nn; ++t)
        next[i][(t + static_cast<std::size_t>(mod_pos(a, n))) % nn] -= acc[i][t];
    }
    acc = std::move(next);
  }
  return acc;
}

bool is_zero_mod_cyclotomic(IPoly p, const std::vector<Integer>& phi) {
  IPoly r = poly_mod_monic(std::move(p), phi);
  return r.empty();
}

}  // namespace

MatrixIdentification identify_from_matrix(const Mat4& m, std::int64_t order_bound) {
  auto ord = matrix_order(m, order_bound);
  if (!ord) {
    throw InvalidInputError("matrix has no finite order up to the bound " +
                            std::to_string(order_bound));
  }
  const std::int64_t n = *ord;
  if (n == 1) throw InvalidInputError("infinite family / trivial action");

  // numeric eigenvalue exponents, rounded to the lattice of n-th roots
  Eigen::Matrix4cd md;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) md(i, j) = static_cast<double>(m(i, j));
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(md, false);
  std::array<std::int64_t, 4> exps;
  for (int i = 0; i < 4; ++i) {
    std::complex<double> ev = es.eigenvalues()[i];
    if (std::abs(std::abs(ev) - 1.0) > 1e-6)
      throw InvalidInputError("matrix has an eigenvalue off the unit circle");
    double angle = std::arg(ev) / (2.0 * M_PI);
    exps[i] = mod_pos(static_cast<std::int64_t>(std::llround(angle * static_cast<double>(n))), n);
  }
  std::sort(exps.begin(), exps.end());

  // exact re-verification: charpoly(M) = prod (x - zeta^{a_i}) in Z[zeta_n]
  std::array<Integer, 5> cp = characteristic_polynomial(m);
  std::vector<IPoly> prod = linear_factor_product(n, exps);
  std::vector<Integer> phi = cyclotomic_polynomial(n);
  for (int d = 0; d <= 4; ++d) {
    IPoly diff = prod[static_cast<std::size_t>(d)];
    diff[0] -= cp[static_cast<std::size_t>(d)];
    if (!is_zero_mod_cyclotomic(std::move(diff), phi))
      throw InvalidInputError("eigenvalue exponents failed exact verification");
  }

  for (std::int64_t e : exps) {
    if (gcd64(e, n) != 1)
      throw InvalidInputError(
          "eigenvalue exponents violate isolation (non-primitive root of unity)");
  }

  // pair exponents summing to 0 mod n: (a, -a), (b, -b)
  const std::array<std::array<int, 4>, 3> pairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (const auto& p : pairings) {
    if (mod_pos(exps[p[0]] + exps[p[1]], n) != 0) continue;
    if (mod_pos(exps[p[2]] + exps[p[3]], n) != 0) continue;
    std::array<std::int64_t, 4> w = {exps[p[0]], exps[p[2]], exps[p[3]], exps[p[1]]};
    auto cls = validate_weights(n, w);
    if (cls) return MatrixIdentification{n, exps, *cls};
  }
  throw InvalidInputError("eigenvalue exponents violate p-invariance (no pairing sums to 0)");
}

std::optional<Mat4> companion_matrix(std::int64_t n, const std::array<std::int64_t, 4>& weights) {
  if (n < 1) return std::nullopt;
  // Split the spectrum into Galois orbits: the conjugates of zeta_n^a are all
  // the primitive (n/gcd(a,n))-th roots.  An integer matrix with this exact
  // spectrum exists iff each orbit appears with uniform multiplicity; it is
  // then a block diagonal of cyclotomic companion blocks (diagonalizable, so
  // of finite order, unlike the plain companion of a repeated-root product).
  std::map<std::int64_t, std::map<std::int64_t, int>> by_order;  // m -> exponent counts
  for (std::int64_t w : weights) {
    std::int64_t r = mod_pos(w, n);
    std::int64_t g = gcd64(r, n);
    by_order[n / g][r] += 1;
  }
  std::vector<std::vector<Integer>> blocks;
  for (const auto& [m, counts] : by_order) {
    std::size_t orbit_size = 0;
    for (std::int64_t b = 0; b < n; ++b)
      if (gcd64(b, n) == n / m) ++orbit_size;
    int mult = counts.begin()->second;
    if (counts.size() != orbit_size) return std::nullopt;
    for (const auto& [exp, cnt] : counts)
      if (cnt != mult) return std::nullopt;
    std::vector<Integer> phi = cyclotomic_polynomial(m);
    for (int copy = 0; copy < mult; ++copy) blocks.push_back(phi);
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size() - 1;
  if (total != 4) return std::nullopt;

  Mat4 out = Mat4::Zero();
  int offset = 0;
  for (const auto& phi : blocks) {
    int deg = static_cast<int>(phi.size()) - 1;
    for (int i = 1; i < deg; ++i) out(offset + i, offset + i - 1) = 1;
    for (int i = 0; i < deg; ++i)
      out(offset + i, offset + deg - 1) = -phi[static_cast<std::size_t>(i)];
    offset += deg;
  }
  return out;
}

}  // namespace hyperfan

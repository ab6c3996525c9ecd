#include "hyperfan/classify.hpp"

#include <algorithm>
#include <set>

namespace hyperfan {

HyperconifoldClass canonical_form(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InvalidInputError("group order n must be positive");
  if (n == 1) return HyperconifoldClass{1, 0, {0}};
  k = mod_pos(k, n);
  if (gcd64(k, n) != 1) throw InvalidInputError("k must be relatively prime to n");
  std::int64_t inv = mod_inverse(k, n);
  std::set<std::int64_t> orbit{k, mod_pos(n - k, n), inv, mod_pos(n - inv, n)};
  HyperconifoldClass c;
  c.n = n;
  c.k = *orbit.begin();
  c.orbit.assign(orbit.begin(), orbit.end());
  return c;
}

std::optional<HyperconifoldClass> validate_weights(std::int64_t n,
                                                   const std::array<std::int64_t, 4>& w) {
  if (n < 1) throw InvalidInputError("group order n must be positive");
  std::array<std::int64_t, 4> a;
  for (int i = 0; i < 4; ++i) a[i] = mod_pos(w[i], n);
  // p-invariance: a1 + a4 = a2 + a3 = 0 mod n
  if (mod_pos(a[0] + a[3], n) != 0 || mod_pos(a[1] + a[2], n) != 0) return std::nullopt;
  // isolation: each coordinate transforms with a primitive n-th root
  for (int i = 0; i < 4; ++i)
    if (gcd64(a[i], n) != 1) return std::nullopt;
  if (n == 1) return canonical_form(1, 0);
  // replace the generator by the power making a1 = 1
  std::int64_t inv = mod_inverse(a[0], n);
  std::int64_t k = mod_pos(a[1] * inv, n);
  return canonical_form(n, k);
}

bool lens_equivalent(std::int64_t n, std::int64_t k, std::int64_t k2) {
  HyperconifoldClass c = canonical_form(n, k);
  if (n > 1 && gcd64(mod_pos(k2, n), n) != 1)
    throw InvalidInputError("k must be relatively prime to n");
  std::int64_t r = mod_pos(k2, n);
  return std::find(c.orbit.begin(), c.orbit.end(), r) != c.orbit.end();
}

Fan hyperconifold_fan(const HyperconifoldClass& c) {
  Integer n(c.n), k(c.k);
  Fan f;
  f.maximal.push_back(make_cone({Vec3(Integer(1), Integer(0), Integer(0)),
                                 Vec3(Integer(1), Integer(1), Integer(0)),
                                 Vec3(Integer(1), k, n),
                                 Vec3(Integer(1), k + 1, n)}));
  return f;
}

ToricDiagram diagram_of(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InvalidInputError("group order n must be positive");
  if (n == 1) {
    if (k != 0) throw InvalidInputError("the conifold is encoded as (n,k) = (1,0)");
  } else {
    if (k < 1 || k >= n) throw InvalidInputError("k must satisfy 1 <= k < n");
    if (gcd64(k, n) != 1) throw InvalidInputError("k must be relatively prime to n");
  }
  return height_one_slice(hyperconifold_fan(HyperconifoldClass{n, k, {}}));
}

bool verify_matrix_action(std::int64_t n, std::int64_t k) {
  canonical_form(n, k);  // validates the pair
  // Entry (i,j) of L W R picks up the phase l_i + r_j (exponents of zeta).
  const std::array<std::int64_t, 2> left = {1, mod_pos(-k, n)};
  const std::array<std::int64_t, 2> right = {0, mod_pos(k - 1, n)};
  const std::array<std::array<std::int64_t, 2>, 4> entry = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  const std::array<std::int64_t, 4> expected = {1, mod_pos(k, n), mod_pos(-k, n),
                                                mod_pos(-1, n)};
  for (int i = 0; i < 4; ++i) {
    std::int64_t phase = mod_pos(left[entry[i][0]] + right[entry[i][1]], n);
    if (phase != mod_pos(expected[i], n)) return false;
  }
  return true;
}

}  // namespace hyperfan

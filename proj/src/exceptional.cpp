#include "hyperfan/exceptional.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hyperfan {

namespace {

// Phase exponents of g over h = e^{i pi / n}, slot order (y1, y2<-y3, y3<-y2, y4).
struct Phases {
  std::int64_t n;                      // h has order 2n
  std::array<std::int64_t, 4> e;       // exponents mod 2n
};

Phases phases_of(std::int64_t n, std::int64_t k) {
  std::int64_t m = 2 * n;
  return Phases{n, {mod_pos(1, m), mod_pos(k, m), mod_pos(n - k, m), mod_pos(n - 1, m)}};
}

// g^j: odd powers swap y2 and y3, even powers are diagonal.
// Returns exponents mod 2n in slot order; `swaps` reports the y2/y3 swap.
std::array<std::int64_t, 4> power_exponents(const Phases& g, std::int64_t j, bool& swaps) {
  std::int64_t m = 2 * g.n;
  swaps = (j % 2) != 0;
  // g^2 is diagonal with exponents (2, n, n, 2(n-1))
  std::int64_t half = j / 2;
  std::array<std::int64_t, 4> even = {mod_pos(2 * half, m), mod_pos(g.n * half, m),
                                      mod_pos(g.n * half, m), mod_pos(2 * (g.n - 1) * half, m)};
  if (!swaps) return even;
  std::array<std::int64_t, 4> out;
  out[0] = mod_pos(even[0] + g.e[0], m);
  out[3] = mod_pos(even[3] + g.e[3], m);
  // diagonal-then-swap: slot2 phase acts on y3, slot3 on y2
  out[1] = mod_pos(even[1] + g.e[1], m);
  out[2] = mod_pos(even[2] + g.e[2], m);
  return out;
}

std::int64_t group_order(const Phases& g) {
  std::int64_t m = 2 * g.n;
  // order of the diagonal g^2
  std::array<std::int64_t, 4> sq = {mod_pos(2, m), mod_pos(g.n, m), mod_pos(g.n, m),
                                    mod_pos(2 * (g.n - 1), m)};
  std::int64_t ord2 = 1;
  for (std::int64_t e : sq) {
    std::int64_t o = e == 0 ? 1 : m / gcd64(e, m);
    ord2 = ord2 / gcd64(ord2, o) * o;
  }
  return 2 * ord2;
}

// Some nontrivial power fixes a coordinate line of the conifold pointwise?
bool fixes_coordinate_line(const Phases& g, std::int64_t order) {
  std::int64_t m = 2 * g.n;
  for (std::int64_t j = 1; j < order; ++j) {
    bool swaps = false;
    std::array<std::int64_t, 4> e = power_exponents(g, j, swaps);
    if (e[0] % m == 0) return true;  // fixes the y1-axis
    if (e[3] % m == 0) return true;  // fixes the y4-axis
    if (!swaps && e[1] % m == 0 && e[2] % m == 0) return true;  // fixes the y2/y3-axes
    // swap-type powers move the y2- and y3-axes onto each other; their
    // eigenlines have both plane coordinates nonzero and miss the conifold
  }
  return false;
}

int p_phase_of(const Phases& g) {
  std::int64_t m = 2 * g.n;
  // y1*y4 and y2*y3 each pick up h^{sum}; both must agree (p maps to a multiple of itself)
  std::int64_t e14 = mod_pos(g.e[0] + g.e[3], m);
  std::int64_t e23 = mod_pos(g.e[1] + g.e[2], m);
  if (e14 != e23) throw InvalidInputError("exchange action does not preserve p up to scale");
  if (e14 == 0) return 1;
  if (2 * e14 == m) return -1;
  throw InvalidInputError("p picks up a phase that is not a sign");
}

int omega_phase_of(const Phases& g, int p_phase) {
  std::int64_t m = 2 * g.n;
  // numerator dy1^dy2^dy3^dy4 picks up (swap sign) * h^{sum of exponents}
  std::int64_t s = mod_pos(g.e[0] + g.e[1] + g.e[2] + g.e[3], m);
  int num;
  if (s == 0) num = -1;          // permutation sign of the y2<->y3 swap
  else if (2 * s == m) num = 1;  // -1 phase times swap sign
  else throw InvalidInputError("holomorphic form picks up a phase that is not a sign");
  return num / p_phase;
}

// class key invariant under generator powers, the y2<->y3 swap, the
// y1<->y4 swap and torus rescalings: multiset {e1, e4} and e2+e3, as exact
// fractions of a full turn, minimized over generators of the same group
using ClassKey = std::array<Rational, 3>;

ClassKey class_key(const Phases& g, std::int64_t order) {
  std::int64_t m = 2 * g.n;
  std::optional<ClassKey> best;
  for (std::int64_t t = 1; t < order; ++t) {
    if (gcd64(t, order) != 1) continue;
    bool swaps = false;
    std::array<std::int64_t, 4> e = power_exponents(g, t, swaps);
    if (!swaps) continue;  // only exchange-type generators represent the class
    Rational r1(mod_pos(e[0], m), m), r4(mod_pos(e[3], m), m);
    Rational r23(mod_pos(e[1] + e[2], m), m);
    ClassKey key{std::min(r1, r4), std::max(r1, r4), r23};
    if (!best || key < *best) best = key;
  }
  return *best;
}

std::string map_text_of(const Phases& g) {
  auto phase_str = [&](std::int64_t e) -> std::string {
    std::int64_t m = 2 * g.n;
    e = mod_pos(e, m);
    if (e == 0) return "";
    if (2 * e == m) return "-";
    if (4 * e == m) return "i*";
    if (4 * e == 3 * m) return "-i*";
    return "h^" + std::to_string(e) + "*";
  };
  return "(y1,y2,y3,y4) -> (" + phase_str(g.e[0]) + "y1, " + phase_str(g.e[1]) + "y3, " +
         phase_str(g.e[2]) + "y2, " + phase_str(g.e[3]) + "y4)";
}

}  // namespace

std::vector<ExchangeAction> exceptional_scan(std::int64_t n_max) {
  if (n_max < 2) throw InvalidInputError("n_max must be at least 2");
  std::map<ClassKey, ExchangeAction> classes;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t k = 0; k < std::max<std::int64_t>(n, 1); ++k) {
      Phases g = phases_of(n, k);
      std::int64_t order = group_order(g);
      if (fixes_coordinate_line(g, order)) continue;
      if (order != 4)
        throw InvalidInputError("survivor with unexpected order " + std::to_string(order));
      int pp = p_phase_of(g);
      int op = omega_phase_of(g, pp);
      if (pp != -1 || op != 1) continue;  // Gorenstein requires an invariant 3-form
      ClassKey key = class_key(g, order);
      auto it = classes.find(key);
      if (it == classes.end() || std::make_pair(n, k) < std::make_pair(it->second.n, it->second.k)) {
        classes[key] = ExchangeAction{n, k, order, pp, op, map_text_of(g)};
      }
    }
  }
  std::vector<ExchangeAction> out;
  for (auto& [key, act] : classes) out.push_back(act);
  std::sort(out.begin(), out.end(), [](const ExchangeAction& a, const ExchangeAction& b) {
    return std::make_pair(a.n, a.k) < std::make_pair(b.n, b.k);
  });
  return out;
}

}  // namespace hyperfan

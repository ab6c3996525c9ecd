#pragma once

#include <optional>
#include <vector>

#include "hyperfan/fan.hpp"
#include "hyperfan/types.hpp"

namespace hyperfan {

// Diagonal Z_n action (zeta^{a1} y1, ..., zeta^{a4} y4) with zeta = e^{2 pi i / n}.
struct DiagonalAction {
  std::int64_t n;
  std::array<std::int64_t, 4> weights;  // residues mod n
};

// The pair (n, k) in normal form.  The orbit {±k^±1 mod n} collects the
// equivalent values of k; the canonical representative is its minimum.
// n = 1, k = 0 encodes the conifold itself.
struct HyperconifoldClass {
  std::int64_t n = 1;
  std::int64_t k = 0;
  std::vector<std::int64_t> orbit;

  bool is_conifold() const { return n == 1; }
  friend bool operator==(const HyperconifoldClass& a, const HyperconifoldClass& b) {
    return a.n == b.n && a.k == b.k;
  }
};

HyperconifoldClass canonical_form(std::int64_t n, std::int64_t k);

std::optional<HyperconifoldClass> validate_weights(std::int64_t n,
                                                   const std::array<std::int64_t, 4>& weights);

// L(n,k) = L(n,k2), equivalently C_{n,k} = C_{n,k2}.
bool lens_equivalent(std::int64_t n, std::int64_t k, std::int64_t k2);

// Fan of C_{n,k}: the single cone over (1,0,0), (1,1,0), (1,k,n), (1,k+1,n).
Fan hyperconifold_fan(const HyperconifoldClass& c);

ToricDiagram diagram_of(std::int64_t n, std::int64_t k);

// Checks, in exponent arithmetic mod n, that
// diag(z, z^-k) W diag(1, z^{k-1}) scales (y1,y2,y3,y4) by (z, z^k, z^-k, z^-1).
bool verify_matrix_action(std::int64_t n, std::int64_t k);

}  // namespace hyperfan

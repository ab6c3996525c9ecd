#pragma once

#include <string>
#include <vector>

#include "hyperfan/types.hpp"

namespace hyperfan {

// Exchange-type generator g: (y1,y2,y3,y4) -> (h y1, h^k y3, h^{n-k} y2, h^{n-1} y4)
// with h = e^{i pi / n}.  Phases are tracked as exponents of h, i.e. mod 2n.
struct ExchangeAction {
  std::int64_t n;
  std::int64_t k;
  std::int64_t order;    // order of the generated group
  int p_phase;           // +1 or -1, action on p = y1 y4 - y2 y3
  int omega_phase;       // +1 or -1, action on the holomorphic 3-form
  std::string map_text;  // e.g. "(y1,y2,y3,y4) -> (i*y1, y3, -y2, i*y4)"
};

// Scans n <= n_max, 0 <= k < n for exchange actions whose quotient is an
// isolated Gorenstein singularity, rejecting any action with a nontrivial
// power fixing a coordinate line, and groups the survivors into equivalence
// classes (generator powers, coordinate swaps, torus rescalings).  Exactly
// one class survives: (y1,y2,y3,y4) -> (i y1, y3, -y2, i y4).
std::vector<ExchangeAction> exceptional_scan(std::int64_t n_max);

}  // namespace hyperfan

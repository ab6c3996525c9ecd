#pragma once

#include <optional>
#include <vector>

#include "hyperfan/types.hpp"

namespace hyperfan {

// Decides whether the homogeneous strict system  A t > 0  (componentwise)
// has a solution, by maximizing the slack s subject to A t >= s*1 and
// -1 <= t_j <= 1 with an exact rational simplex (Bland's rule).  Strict rows
// may be mixed with non-strict ones (A t >= 0) via `nonstrict`.
struct StrictFeasibility {
  bool feasible;
  std::vector<Rational> witness;  // a point with A t > 0, when feasible
};

StrictFeasibility strictly_feasible(const std::vector<std::vector<Integer>>& strict_rows,
                                    std::size_t num_vars,
                                    const std::vector<std::vector<Integer>>& nonstrict_rows = {});

}  // namespace hyperfan

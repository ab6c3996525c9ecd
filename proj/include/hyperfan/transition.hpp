#pragma once

#include <string>
#include <vector>

#include "hyperfan/group.hpp"
#include "hyperfan/intersect.hpp"

namespace hyperfan {

struct HodgeData {
  std::int64_t h11 = 0;
  std::int64_t h21 = 0;
  std::int64_t euler() const { return 2 * (h11 - h21); }
};

// (h11 + n - 1, h21 - 1): one modulus is spent forming the singularity and
// the resolution adds n-1 independent exceptional divisor classes.
HodgeData hodge_after(const HodgeData& before, std::int64_t n);

struct TransitionReport {
  HyperconifoldClass cls;
  HodgeData before, after;
  std::string group_label;
  int group_order = 1;
  std::string pi1_label;
  int pi1_order = 1;
  std::int64_t euler_change = 0;
  int normal_closure_order = 1;
  IntersectionTensor tensor;
  std::vector<Vec3> tensor_divisors;
  std::vector<std::string> symbolic;  // mixed intersection statements
  std::vector<std::string> warnings;
};

TransitionReport transition_report(const HyperconifoldClass& cls, const HodgeData& before,
                                   const FiniteGroup& group, const std::vector<int>& fixed_seeds,
                                   const Resolution& resolution);

}  // namespace hyperfan

#include "hyperfan/transition.hpp"

namespace hyperfan {

HodgeData hodge_after(const HodgeData& before, std::int64_t n) {
  if (n < 1) throw InvalidInputError("transition order n must be positive");
  if (before.h21 < 1) throw DomainError("no modulus available to form the singularity");
  return HodgeData{before.h11 + n - 1, before.h21 - 1};
}

TransitionReport transition_report(const HyperconifoldClass& cls, const HodgeData& before,
                                   const FiniteGroup& group, const std::vector<int>& fixed_seeds,
                                   const Resolution& resolution) {
  if (!(resolution.base == cls))
    throw InvalidInputError("resolution does not belong to the given class");
  TransitionReport rep;
  rep.cls = cls;
  rep.before = before;
  rep.after = hodge_after(before, cls.n);
  rep.euler_change = rep.after.euler() - before.euler();
  if (rep.euler_change != 2 * cls.n)
    throw DomainError("Euler change does not equal 2n");

  rep.group_label = identify_group(group);
  rep.group_order = group.order;
  std::vector<int> closure = normal_closure(group, fixed_seeds);
  rep.normal_closure_order = static_cast<int>(closure.size());
  FiniteGroup pi1 = quotient_group(group, closure);
  rep.pi1_label = identify_group(pi1);
  rep.pi1_order = pi1.order;

  std::vector<int> seed_subgroup = subgroup_generated(group, fixed_seeds);
  bool cyclic_of_order_n = false;
  for (int s : fixed_seeds) {
    if (group.element_order(s) == cls.n &&
        static_cast<std::int64_t>(seed_subgroup.size()) == cls.n)
      cyclic_of_order_n = true;
  }
  if (!cyclic_of_order_n)
    rep.warnings.push_back("seeds do not generate a cyclic subgroup of order n");

  rep.tensor = triple_intersections(resolution);
  IntersectionTensor oracle = triple_intersections_oracle(resolution);
  if (rep.tensor.d != oracle.d)
    throw DomainError("triple intersection tensor disagrees with the wall-pairing oracle");
  rep.tensor_divisors = resolution.interior_rays();
  rep.symbolic = {"dhat_ijk = d_ijk", "dhat_ij_alpha = 0", "dhat_i_alpha_beta = 0"};
  return rep;
}

}  // namespace hyperfan

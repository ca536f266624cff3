#ifndef TREEPERM_BIJECTION_HPP
#define TREEPERM_BIJECTION_HPP

#include <vector>

#include "treeperm/kid_vector.hpp"
#include "treeperm/permutation.hpp"

namespace treeperm {

/// One construction step: sprout k = perm[i] acquired child j, leaving
/// the recorded charge array (post-step, indexed by label 0..dn).
struct ChargeTraceStep {
  Label index;   // i
  Label sprout;  // k
  Label child;   // j
  std::vector<int> charges;
};

struct ChargeTrace {
  TreeShape shape;
  std::vector<ChargeTraceStep> steps;
  Label root;
};

/// Forward map: dn construction steps, each giving the next sprout
/// (taken from perm) the policy-chosen child among labels with charge +1.
/// Throws InvalidPermutation when perm's length is not dn.
KidVector perm_to_tree(const Permutation& perm, const TreeShape& shape,
                       ChildPolicy policy = ChildPolicy::SmallestLabel);

/// Inverse map: the same loop, reading the sprout for each chosen child
/// out of the kid vector instead. Returns the unique permutation that
/// perm_to_tree maps to `kids` under the same policy.
Permutation tree_to_perm(const KidVector& kids,
                         ChildPolicy policy = ChildPolicy::SmallestLabel);

/// Forward map with the full per-step record. Charges start at 1-d per
/// node and +1 per leaf; their sum stays +1 throughout.
ChargeTrace trace_construction(const Permutation& perm, const TreeShape& shape,
                               ChildPolicy policy = ChildPolicy::SmallestLabel);

}  // namespace treeperm

#endif  // TREEPERM_BIJECTION_HPP

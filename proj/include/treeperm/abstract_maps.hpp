#ifndef TREEPERM_ABSTRACT_MAPS_HPP
#define TREEPERM_ABSTRACT_MAPS_HPP

#include <vector>

#include "treeperm/labeled_tree.hpp"
#include "treeperm/permutation.hpp"

namespace treeperm {

/// Maximum leaf label anywhere in t.
Label maxleaf(const LabeledTree& t);

/// 0 for leaves, 1 + max over children otherwise.
Label height(const LabeledTree& t);

/// Strict order on trees: by maxleaf, then by height. Total on the
/// proper subtrees of any one valid tree.
bool tree_less(const LabeledTree& u, const LabeledTree& v);

/// The proper subtree addressed by downward sprout number k: the r-th
/// child of the node labeled q, with q = floor(k/d), r = k - d*q.
/// Throws NodeNotFound when no node is labeled q (corrupt input).
const LabeledTree& subtree_at(const LabeledTree& t, Label sprout);

/// For each node q, the construction step at which q is built:
/// 1 + max over r of perm^-1(d*q + r). Injective for valid inputs.
std::vector<Label> iota_indices(const Permutation& perm, const TreeShape& shape);

/// Order-theoretic tree -> permutation map: the permutation that sorts
/// the dn proper subtrees strictly ascending. A tie between distinct
/// sprouts means the tree was corrupt; that raises InternalCorruption
/// rather than resolving silently.
Permutation compute_P(const LabeledTree& t);

/// Order-theoretic permutation -> tree map: builds the subtree sequence
/// bottom-up (a node for q at step iota(q), fresh leaves everywhere
/// else) and returns the final tree.
LabeledTree compute_T(const Permutation& perm, const TreeShape& shape);

}  // namespace treeperm

#endif  // TREEPERM_ABSTRACT_MAPS_HPP

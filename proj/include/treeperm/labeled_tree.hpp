#ifndef TREEPERM_LABELED_TREE_HPP
#define TREEPERM_LABELED_TREE_HPP

#include <vector>

#include "treeperm/kid_vector.hpp"
#include "treeperm/shape.hpp"

namespace treeperm {

/// Recursive node/leaf structure. A leaf has no children; a node has
/// exactly d. Value type with structural equality.
class LabeledTree {
 public:
  static LabeledTree leaf(Label label) { return LabeledTree(label, {}); }

  /// Throws InvalidTree when `children` is empty.
  static LabeledTree node(Label label, std::vector<LabeledTree> children);

  bool is_leaf() const noexcept { return children_.empty(); }
  Label label() const noexcept { return label_; }
  const std::vector<LabeledTree>& children() const noexcept { return children_; }
  Label arity() const noexcept { return static_cast<Label>(children_.size()); }

  const LabeledTree& child(Label r) const {
    return children_[static_cast<std::size_t>(r)];
  }

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  LabeledTree(Label label, std::vector<LabeledTree> children)
      : label_(label), children_(std::move(children)) {}

  Label label_;
  std::vector<LabeledTree> children_;
};

/// Infers and validates the shape of `t`: uniform arity d, node labels
/// exactly {0..n-1}, leaf labels exactly {n..dn}, each used once.
/// A lone leaf fixes n = 0 but leaves d indeterminate; `arity_if_leaf_only`
/// supplies it. Throws InvalidTree naming the violation.
TreeShape tree_shape(const LabeledTree& t, Label arity_if_leaf_only = 2);

/// Checks that `t` is a valid tree of exactly `shape`.
void validate_tree(const LabeledTree& t, const TreeShape& shape);

KidVector to_kid_vector(const LabeledTree& t);
KidVector to_kid_vector(const LabeledTree& t, const TreeShape& shape);

/// Rebuilds the recursive form starting from root_label(kids).
LabeledTree from_kid_vector(const KidVector& kids);

}  // namespace treeperm

#endif  // TREEPERM_LABELED_TREE_HPP

#ifndef TREEPERM_SHAPE_HPP
#define TREEPERM_SHAPE_HPP

#include <cstdint>

#include "treeperm/error.hpp"

namespace treeperm {

using Label = std::int64_t;

/// How the construction picks the next child among labels with charge +1.
enum class ChildPolicy {
  SmallestLabel,  // reference behavior
  LargestLabel,
};

/// Parameter pair (d, n) for n-node d-ary trees. Node labels are
/// 0..n-1, leaf labels n..dn; there are always m = (d-1)n + 1 leaves.
/// m and dn are recomputed from (d, n), never stored.
class TreeShape {
 public:
  TreeShape(Label arity, Label node_count);

  Label arity() const noexcept { return d_; }        // d
  Label node_count() const noexcept { return n_; }   // n
  Label leaf_count() const noexcept { return (d_ - 1) * n_ + 1; }  // m
  Label edge_count() const noexcept { return d_ * n_; }            // dn
  Label label_count() const noexcept { return d_ * n_ + 1; }

  bool is_node_label(Label x) const noexcept { return x >= 0 && x < n_; }
  bool is_leaf_label(Label x) const noexcept {
    return x >= n_ && x <= edge_count();
  }

  friend bool operator==(const TreeShape&, const TreeShape&) = default;

 private:
  Label d_;
  Label n_;
};

}  // namespace treeperm

#endif  // TREEPERM_SHAPE_HPP

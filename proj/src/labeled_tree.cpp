#include "treeperm/labeled_tree.hpp"

#include <string>

#include "treeperm/error.hpp"

namespace treeperm {

namespace {

struct LabelScan {
  std::vector<Label> node_labels;
  std::vector<Label> leaf_labels;
  Label arity = -1;  // -1 until the first node is seen
};

void scan(const LabeledTree& t, LabelScan& out) {
  if (t.is_leaf()) {
    out.leaf_labels.push_back(t.label());
    return;
  }
  if (out.arity == -1) {
    out.arity = t.arity();
  } else if (out.arity != t.arity()) {
    throw Error(ErrorCode::InvalidTree,
                "node " + std::to_string(t.label()) + " has " +
                    std::to_string(t.arity()) + " children, others have " +
                    std::to_string(out.arity));
  }
  out.node_labels.push_back(t.label());
  for (const LabeledTree& c : t.children()) scan(c, out);
}

void check_label_set(const std::vector<Label>& labels, Label lo, Label hi,
                     const char* kind) {
  std::vector<bool> seen(static_cast<std::size_t>(hi - lo + 1), false);
  for (Label x : labels) {
    if (x < lo || x > hi) {
      throw Error(ErrorCode::InvalidTree,
                  std::string(kind) + " label " + std::to_string(x) +
                      " is outside {" + std::to_string(lo) + ",...," +
                      std::to_string(hi) + "}");
    }
    if (seen[static_cast<std::size_t>(x - lo)]) {
      throw Error(ErrorCode::InvalidTree, std::string(kind) + " label " +
                                              std::to_string(x) +
                                              " is used more than once");
    }
    seen[static_cast<std::size_t>(x - lo)] = true;
  }
  // |labels| == hi - lo + 1 together with the two checks above makes the
  // set exact.
  if (static_cast<Label>(labels.size()) != hi - lo + 1) {
    throw Error(ErrorCode::InvalidTree,
                std::string(kind) + " labels incomplete: have " +
                    std::to_string(labels.size()) + ", expected " +
                    std::to_string(hi - lo + 1));
  }
}

void fill_kids(const LabeledTree& t, Label d, std::vector<Label>& kids) {
  if (t.is_leaf()) return;
  for (Label r = 0; r < d; ++r) {
    kids[static_cast<std::size_t>(d * t.label() + r)] = t.child(r).label();
    fill_kids(t.child(r), d, kids);
  }
}

LabeledTree build(const KidVector& kids, Label label) {
  const TreeShape& shape = kids.shape();
  if (!shape.is_node_label(label)) return LabeledTree::leaf(label);
  std::vector<LabeledTree> children;
  children.reserve(static_cast<std::size_t>(shape.arity()));
  for (Label r = 0; r < shape.arity(); ++r) {
    children.push_back(build(kids, kids.child_at(shape.arity() * label + r)));
  }
  return LabeledTree::node(label, std::move(children));
}

}  // namespace

LabeledTree LabeledTree::node(Label label, std::vector<LabeledTree> children) {
  if (children.empty()) {
    throw Error(ErrorCode::InvalidTree,
                "node " + std::to_string(label) + " has no children");
  }
  return LabeledTree(label, std::move(children));
}

TreeShape tree_shape(const LabeledTree& t, Label arity_if_leaf_only) {
  LabelScan scanned;
  scan(t, scanned);

  const Label n = static_cast<Label>(scanned.node_labels.size());
  const Label d = scanned.arity == -1 ? arity_if_leaf_only : scanned.arity;
  TreeShape shape(d, n);

  check_label_set(scanned.node_labels, 0, n - 1, "node");
  check_label_set(scanned.leaf_labels, n, shape.edge_count(), "leaf");
  return shape;
}

void validate_tree(const LabeledTree& t, const TreeShape& shape) {
  const TreeShape inferred = tree_shape(t, shape.arity());
  if (inferred != shape) {
    throw Error(ErrorCode::InvalidTree,
                "tree has shape (d = " + std::to_string(inferred.arity()) +
                    ", n = " + std::to_string(inferred.node_count()) +
                    "), expected (d = " + std::to_string(shape.arity()) +
                    ", n = " + std::to_string(shape.node_count()) + ")");
  }
}

KidVector to_kid_vector(const LabeledTree& t) {
  return to_kid_vector(t, tree_shape(t));
}

KidVector to_kid_vector(const LabeledTree& t, const TreeShape& shape) {
  validate_tree(t, shape);
  std::vector<Label> kids(static_cast<std::size_t>(shape.edge_count()), -1);
  fill_kids(t, shape.arity(), kids);
  return KidVector::validated(shape, std::move(kids));
}

LabeledTree from_kid_vector(const KidVector& kids) {
  return build(kids, kids.root());
}

}  // namespace treeperm

#include "treeperm/abstract_maps.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "treeperm/error.hpp"

namespace treeperm {

namespace {

// (maxleaf, height) three-way comparison; 0 only for order-equivalent
// trees, which among proper subtrees of one valid tree means identity.
int compare(const LabeledTree& u, const LabeledTree& v) {
  const Label mu = maxleaf(u), mv = maxleaf(v);
  if (mu != mv) return mu < mv ? -1 : 1;
  const Label hu = height(u), hv = height(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  return 0;
}

const LabeledTree* find_node(const LabeledTree& t, Label q) {
  if (t.is_leaf()) return nullptr;
  if (t.label() == q) return &t;
  for (const LabeledTree& c : t.children()) {
    if (const LabeledTree* hit = find_node(c, q)) return hit;
  }
  return nullptr;
}

// Subtree pointer per downward sprout number, indexed k = d*q + r.
void collect_subtrees(const LabeledTree& t, Label d,
                      std::vector<const LabeledTree*>& slots) {
  if (t.is_leaf()) return;
  for (Label r = 0; r < d; ++r) {
    slots[static_cast<std::size_t>(d * t.label() + r)] = &t.child(r);
    collect_subtrees(t.child(r), d, slots);
  }
}

}  // namespace

Label maxleaf(const LabeledTree& t) {
  if (t.is_leaf()) return t.label();
  Label best = maxleaf(t.child(0));
  for (Label r = 1; r < t.arity(); ++r) {
    best = std::max(best, maxleaf(t.child(r)));
  }
  return best;
}

Label height(const LabeledTree& t) {
  if (t.is_leaf()) return 0;
  Label deepest = 0;
  for (const LabeledTree& c : t.children()) {
    deepest = std::max(deepest, height(c));
  }
  return 1 + deepest;
}

bool tree_less(const LabeledTree& u, const LabeledTree& v) {
  return compare(u, v) < 0;
}

const LabeledTree& subtree_at(const LabeledTree& t, Label sprout) {
  if (t.is_leaf() || sprout < 0) {
    throw Error(ErrorCode::NodeNotFound,
                "no subtree at sprout " + std::to_string(sprout));
  }
  const Label d = t.arity();
  const Label q = sprout / d;
  const Label r = sprout - d * q;
  const LabeledTree* owner = find_node(t, q);
  if (owner == nullptr) {
    throw Error(ErrorCode::NodeNotFound,
                "tree has no node labeled " + std::to_string(q) +
                    " (sprout " + std::to_string(sprout) + ")");
  }
  return owner->child(r);
}

std::vector<Label> iota_indices(const Permutation& perm, const TreeShape& shape) {
  if (perm.length() != shape.edge_count()) {
    throw Error(ErrorCode::InvalidPermutation,
                "permutation length " + std::to_string(perm.length()) +
                    " does not match d*n = " +
                    std::to_string(shape.edge_count()));
  }
  const Label d = shape.arity();
  const std::vector<Label> inv = perm.inverse();
  std::vector<Label> iota(static_cast<std::size_t>(shape.node_count()));
  for (Label q = 0; q < shape.node_count(); ++q) {
    Label latest = inv[static_cast<std::size_t>(d * q)];
    for (Label r = 1; r < d; ++r) {
      latest = std::max(latest, inv[static_cast<std::size_t>(d * q + r)]);
    }
    iota[static_cast<std::size_t>(q)] = 1 + latest;
  }
  return iota;
}

Permutation compute_P(const LabeledTree& t) {
  const TreeShape shape = tree_shape(t);
  const Label len = shape.edge_count();

  std::vector<const LabeledTree*> slots(static_cast<std::size_t>(len), nullptr);
  collect_subtrees(t, shape.arity(), slots);

  // Sort sprout numbers by (maxleaf, height) of their subtrees; the keys
  // are computed once up front.
  struct Entry {
    Label max_leaf;
    Label tree_height;
    Label sprout;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(len));
  for (Label k = 0; k < len; ++k) {
    const LabeledTree* v = slots[static_cast<std::size_t>(k)];
    entries.push_back({maxleaf(*v), height(*v), k});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.max_leaf != b.max_leaf) return a.max_leaf < b.max_leaf;
    if (a.tree_height != b.tree_height) return a.tree_height < b.tree_height;
    return a.sprout < b.sprout;
  });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].max_leaf == entries[i].max_leaf &&
        entries[i - 1].tree_height == entries[i].tree_height) {
      throw Error(ErrorCode::InternalCorruption,
                  "proper subtrees at sprouts " +
                      std::to_string(entries[i - 1].sprout) + " and " +
                      std::to_string(entries[i].sprout) +
                      " are not strictly ordered");
    }
  }

  std::vector<Label> pi;
  pi.reserve(entries.size());
  for (const Entry& e : entries) pi.push_back(e.sprout);
  return Permutation::from_entries(std::move(pi));
}

LabeledTree compute_T(const Permutation& perm, const TreeShape& shape) {
  const Label d = shape.arity();
  const Label n = shape.node_count();
  const Label len = shape.edge_count();

  const std::vector<Label> inv = perm.inverse();
  const std::vector<Label> iota = iota_indices(perm, shape);

  // iota is injective for any valid permutation; node_at[i] is the q
  // built at step i, or -1 when step i introduces a fresh leaf.
  std::vector<Label> node_at(static_cast<std::size_t>(len) + 1, -1);
  for (Label q = 0; q < n; ++q) {
    Label& slot = node_at[static_cast<std::size_t>(iota[static_cast<std::size_t>(q)])];
    if (slot != -1) {
      throw Error(ErrorCode::InternalCorruption,
                  "iota collides for nodes " + std::to_string(slot) + " and " +
                      std::to_string(q));
    }
    slot = q;
  }

  std::vector<std::optional<LabeledTree>> built(static_cast<std::size_t>(len) + 1);
  Label nodes_built = 0;
  for (Label i = 0; i <= len; ++i) {
    const Label q = node_at[static_cast<std::size_t>(i)];
    if (q == -1) {
      built[static_cast<std::size_t>(i)] = LabeledTree::leaf(n + i - nodes_built);
      continue;
    }
    std::vector<LabeledTree> children;
    children.reserve(static_cast<std::size_t>(d));
    for (Label r = 0; r < d; ++r) {
      const Label child_step = inv[static_cast<std::size_t>(d * q + r)];
      std::optional<LabeledTree>& c = built[static_cast<std::size_t>(child_step)];
      if (!c.has_value()) {
        throw Error(ErrorCode::InternalCorruption,
                    "subtree for step " + std::to_string(child_step) +
                        " consumed twice");
      }
      children.push_back(std::move(*c));
      c.reset();
    }
    built[static_cast<std::size_t>(i)] = LabeledTree::node(q, std::move(children));
    ++nodes_built;
  }
  return std::move(*built[static_cast<std::size_t>(len)]);
}

}  // namespace treeperm

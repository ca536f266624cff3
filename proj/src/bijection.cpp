#include "treeperm/bijection.hpp"

#include <string>

#include "treeperm/error.hpp"

namespace treeperm {

namespace {

// Net charge per label at the start of construction: a node owns one
// upward and d downward sprouts, a leaf just the upward one.
std::vector<int> initial_charges(const TreeShape& shape) {
  std::vector<int> charge(static_cast<std::size_t>(shape.label_count()));
  for (Label i = 0; i <= shape.edge_count(); ++i) {
    charge[static_cast<std::size_t>(i)] =
        shape.is_node_label(i) ? 1 - static_cast<int>(shape.arity()) : 1;
  }
  return charge;
}

// The policy-chosen label with charge +1. One always exists: the total
// charge is conserved at +1 and no single label can exceed +1.
Label pick_child(const std::vector<int>& charge, ChildPolicy policy) {
  const Label top = static_cast<Label>(charge.size()) - 1;
  if (policy == ChildPolicy::SmallestLabel) {
    for (Label j = 0; j <= top; ++j) {
      if (charge[static_cast<std::size_t>(j)] == 1) return j;
    }
  } else {
    for (Label j = top; j >= 0; --j) {
      if (charge[static_cast<std::size_t>(j)] == 1) return j;
    }
  }
  throw Error(ErrorCode::InternalCorruption, "no label carries charge +1");
}

void require_length(const Permutation& perm, const TreeShape& shape) {
  if (perm.length() != shape.edge_count()) {
    throw Error(ErrorCode::InvalidPermutation,
                "permutation length " + std::to_string(perm.length()) +
                    " does not match d*n = " +
                    std::to_string(shape.edge_count()));
  }
}

}  // namespace

KidVector perm_to_tree(const Permutation& perm, const TreeShape& shape,
                       ChildPolicy policy) {
  require_length(perm, shape);
  const Label d = shape.arity();
  const Label len = shape.edge_count();

  std::vector<int> charge = initial_charges(shape);
  std::vector<Label> kids(static_cast<std::size_t>(len), -1);
  for (Label i = 0; i < len; ++i) {
    const Label j = pick_child(charge, policy);
    const Label k = perm[i];
    kids[static_cast<std::size_t>(k)] = j;
    charge[static_cast<std::size_t>(j)] = 0;
    charge[static_cast<std::size_t>(k / d)] += 1;
  }
  return KidVector::validated(shape, std::move(kids));
}

Permutation tree_to_perm(const KidVector& kids, ChildPolicy policy) {
  const TreeShape& shape = kids.shape();
  const Label d = shape.arity();
  const Label len = shape.edge_count();

  // Sprout that points at each non-root label; unique because every such
  // label occurs exactly once in kids.
  std::vector<Label> sprout_of(static_cast<std::size_t>(shape.label_count()), -1);
  for (Label k = 0; k < len; ++k) {
    sprout_of[static_cast<std::size_t>(kids.child_at(k))] = k;
  }

  std::vector<int> charge = initial_charges(shape);
  std::vector<Label> perm(static_cast<std::size_t>(len));
  for (Label i = 0; i < len; ++i) {
    const Label j = pick_child(charge, policy);
    const Label k = sprout_of[static_cast<std::size_t>(j)];
    if (k < 0) {
      throw Error(ErrorCode::InternalCorruption,
                  "selected label " + std::to_string(j) +
                      " has no sprout pointing at it");
    }
    perm[static_cast<std::size_t>(i)] = k;
    charge[static_cast<std::size_t>(j)] = 0;
    charge[static_cast<std::size_t>(k / d)] += 1;
  }
  return Permutation::from_entries(std::move(perm));
}

ChargeTrace trace_construction(const Permutation& perm, const TreeShape& shape,
                               ChildPolicy policy) {
  require_length(perm, shape);
  const Label d = shape.arity();
  const Label len = shape.edge_count();

  std::vector<int> charge = initial_charges(shape);
  std::vector<Label> kids(static_cast<std::size_t>(len), -1);
  ChargeTrace trace{shape, {}, -1};
  trace.steps.reserve(static_cast<std::size_t>(len));
  for (Label i = 0; i < len; ++i) {
    const Label j = pick_child(charge, policy);
    const Label k = perm[i];
    kids[static_cast<std::size_t>(k)] = j;
    charge[static_cast<std::size_t>(j)] = 0;
    charge[static_cast<std::size_t>(k / d)] += 1;
    trace.steps.push_back({i, k, j, charge});
  }
  trace.root = KidVector::validated(shape, std::move(kids)).root();
  return trace;
}

}  // namespace treeperm

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "treeperm/abstract_maps.hpp"
#include "treeperm/bijection.hpp"
#include "treeperm/enumeration.hpp"
#include "treeperm/error.hpp"
#include "treeperm/labeled_tree.hpp"
#include "treeperm/sampler.hpp"

using namespace treeperm;

namespace {

Permutation perm_of(std::vector<Label> entries) {
  return Permutation::from_entries(std::move(entries));
}

// Node 0 over (node 1 over leaves 3, 2) and leaf 4.
LabeledTree worked_example() {
  return LabeledTree::node(
      0, {LabeledTree::node(1, {LabeledTree::leaf(3), LabeledTree::leaf(2)}),
          LabeledTree::leaf(4)});
}

}  // namespace

TEST_SUITE_BEGIN("subtree order");

TEST_CASE("maxleaf and height on the worked example") {
  const LabeledTree t = worked_example();
  CHECK(maxleaf(t) == 4);
  CHECK(height(t) == 2);
  CHECK(maxleaf(t.child(0)) == 3);
  CHECK(height(t.child(0)) == 1);
  CHECK(maxleaf(t.child(1)) == 4);
  CHECK(height(t.child(1)) == 0);
}

TEST_CASE("order is lexicographic in (maxleaf, height)") {
  const LabeledTree a = LabeledTree::leaf(2);
  const LabeledTree b =
      LabeledTree::node(1, {LabeledTree::leaf(3), LabeledTree::leaf(2)});
  const LabeledTree c = LabeledTree::leaf(3);

  CHECK(tree_less(a, b));   // maxleaf 2 < 3
  CHECK(tree_less(c, b));   // equal maxleaf, height 0 < 1
  CHECK(!tree_less(b, c));
  CHECK(!tree_less(a, a));
}

TEST_CASE("proper subtrees are strictly ordered") {
  // Distinct sprouts always hold order-distinct subtrees; compare every
  // pair in every tree of a full sweep.
  const TreeShape shape(2, 3);
  TreeEnumerator trees(shape);
  while (auto row = trees.next()) {
    const LabeledTree t = from_kid_vector(row->kids);
    for (Label j = 0; j < shape.edge_count(); ++j) {
      for (Label k = j + 1; k < shape.edge_count(); ++k) {
        const LabeledTree& u = subtree_at(t, j);
        const LabeledTree& v = subtree_at(t, k);
        REQUIRE(tree_less(u, v) != tree_less(v, u));
      }
    }
  }
}

TEST_CASE("subtree addressing") {
  const LabeledTree t = worked_example();
  CHECK(subtree_at(t, 0) == t.child(0));
  CHECK(subtree_at(t, 1) == LabeledTree::leaf(4));
  CHECK(subtree_at(t, 2) == LabeledTree::leaf(3));
  CHECK(subtree_at(t, 3) == LabeledTree::leaf(2));
  CHECK_THROWS_AS(subtree_at(t, 4), Error);
  CHECK_THROWS_AS(subtree_at(LabeledTree::leaf(0), 0), Error);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("order-theoretic maps");

TEST_CASE("worked example forward") {
  const std::vector<Label> iota = iota_indices(perm_of({3, 2, 0, 1}),
                                               TreeShape(2, 2));
  CHECK(iota == std::vector<Label>{4, 2});

  const LabeledTree t = compute_T(perm_of({3, 2, 0, 1}), TreeShape(2, 2));
  CHECK(t == worked_example());
}

TEST_CASE("worked example backward") {
  CHECK(compute_P(worked_example()) == perm_of({3, 2, 0, 1}));
}

TEST_CASE("agrees with the charge construction everywhere") {
  for (const TreeShape shape : {TreeShape(2, 3), TreeShape(3, 2),
                                TreeShape(1, 4)}) {
    PermutationEnumerator perms(shape.edge_count());
    while (auto perm = perms.next()) {
      const KidVector kids = perm_to_tree(*perm, shape);
      const LabeledTree via_charges = from_kid_vector(kids);
      const LabeledTree via_order = compute_T(*perm, shape);
      REQUIRE(via_order == via_charges);
      REQUIRE(compute_P(via_charges) == *perm);
    }
  }
}

TEST_CASE("inverse pair on large random permutations") {
  // Too big to sweep; spot-check the pair on seeded draws.
  SeededGenerator gen(20260817);
  for (const TreeShape shape : {TreeShape(2, 8), TreeShape(3, 5),
                                TreeShape(4, 4)}) {
    for (int i = 0; i < 300; ++i) {
      const Permutation perm = sample_permutation(gen, shape.edge_count());
      const LabeledTree t = compute_T(perm, shape);
      REQUIRE(compute_P(t) == perm);
      REQUIRE(to_kid_vector(t, shape) == perm_to_tree(perm, shape));
    }
  }
}

TEST_CASE("construction steps sort the subtrees") {
  // sigma_{perm[0]} < sigma_{perm[1]} < ... on the finished tree.
  const TreeShape shape(2, 3);
  PermutationEnumerator perms(shape.edge_count());
  while (auto perm = perms.next()) {
    const LabeledTree t = compute_T(*perm, shape);
    for (Label i = 0; i + 1 < shape.edge_count(); ++i) {
      REQUIRE(tree_less(subtree_at(t, (*perm)[i]),
                        subtree_at(t, (*perm)[i + 1])));
    }
  }
}

TEST_CASE("iota is the build step of each node") {
  const TreeShape shape(2, 3);
  PermutationEnumerator perms(shape.edge_count());
  while (auto perm = perms.next()) {
    const std::vector<Label> iota = iota_indices(*perm, shape);
    const std::vector<Label> inv = perm->inverse();
    for (Label q = 0; q < shape.node_count(); ++q) {
      // Node q is built right after its last child subtree.
      Label latest = -1;
      for (Label r = 0; r < shape.arity(); ++r) {
        latest = std::max(latest, inv[static_cast<std::size_t>(2 * q + r)]);
      }
      REQUIRE(iota[static_cast<std::size_t>(q)] == latest + 1);
    }
  }
}

TEST_CASE("length mismatch is rejected") {
  CHECK_THROWS_AS(compute_T(perm_of({0, 1}), TreeShape(2, 2)), Error);
  CHECK_THROWS_AS(iota_indices(perm_of({0}), TreeShape(2, 2)), Error);
}

TEST_CASE("empty and unary shapes") {
  CHECK(compute_T(perm_of({}), TreeShape(2, 0)) == LabeledTree::leaf(0));

  const TreeShape chain(1, 3);
  PermutationEnumerator perms(3);
  while (auto perm = perms.next()) {
    REQUIRE(compute_P(compute_T(*perm, chain)) == *perm);
  }
}

TEST_SUITE_END();

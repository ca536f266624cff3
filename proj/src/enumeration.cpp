#include "treeperm/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "treeperm/error.hpp"

namespace treeperm {

namespace {

void append_key(const KidVector& kids, Label label, std::string& out) {
  const TreeShape& shape = kids.shape();
  if (shape.is_leaf_label(label)) {
    out.push_back('L');
    return;
  }
  out.push_back('N');
  const Label d = shape.arity();
  for (Label r = 0; r < d; ++r) {
    append_key(kids, kids.child_at(d * label + r), out);
  }
}

}  // namespace

PermutationEnumerator::PermutationEnumerator(Label length, Label max_length)
    : exhausted_(false), first_(true) {
  if (length < 0) {
    throw Error(ErrorCode::LabelOutOfRange,
                "negative permutation length " + std::to_string(length));
  }
  if (length > max_length) {
    throw Error(ErrorCode::TooLarge,
                "enumerating length " + std::to_string(length) +
                    " exceeds the limit of " + std::to_string(max_length) +
                    "; raise the limit explicitly to proceed");
  }
  current_.resize(static_cast<std::size_t>(length));
  std::iota(current_.begin(), current_.end(), Label{0});
}

std::optional<Permutation> PermutationEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (first_) {
    first_ = false;
  } else if (!std::next_permutation(current_.begin(), current_.end())) {
    exhausted_ = true;
    return std::nullopt;
  }
  return Permutation::from_entries(std::vector<Label>(current_));
}

TreeEnumerator::TreeEnumerator(const TreeShape& shape, ChildPolicy policy,
                               Label max_length)
    : shape_(shape),
      policy_(policy),
      perms_(shape.edge_count(), max_length),
      rank_(0) {}

std::optional<EnumeratedTree> TreeEnumerator::next() {
  std::optional<Permutation> perm = perms_.next();
  if (!perm.has_value()) return std::nullopt;
  KidVector kids = perm_to_tree(*perm, shape_, policy_);
  return EnumeratedTree{rank_++, std::move(*perm), std::move(kids)};
}

std::string shape_key(const KidVector& kids) {
  std::string out;
  const TreeShape& shape = kids.shape();
  out.reserve(static_cast<std::size_t>(shape.label_count()));
  append_key(kids, kids.root(), out);
  return out;
}

ShapeCensus shape_census(const TreeShape& shape, Label max_length) {
  ShapeCensus census;
  TreeEnumerator trees(shape, ChildPolicy::SmallestLabel, max_length);
  while (std::optional<EnumeratedTree> row = trees.next()) {
    ++census.multiplicity[shape_key(row->kids)];
    ++census.total;
  }
  return census;
}

BigCount count_shapes(const TreeShape& shape, Label max_length) {
  return BigCount(static_cast<unsigned long>(
      shape_census(shape, max_length).multiplicity.size()));
}

}  // namespace treeperm

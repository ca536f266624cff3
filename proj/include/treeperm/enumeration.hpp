#ifndef TREEPERM_ENUMERATION_HPP
#define TREEPERM_ENUMERATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "treeperm/bijection.hpp"
#include "treeperm/counting.hpp"
#include "treeperm/kid_vector.hpp"
#include "treeperm/permutation.hpp"

namespace treeperm {

/// Enumeration refuses lengths beyond this unless the caller raises the
/// guard explicitly. Error, not truncation.
inline constexpr Label kDefaultEnumerationLimit = 12;

/// All permutations of a given length in lexicographic order.
class PermutationEnumerator {
 public:
  explicit PermutationEnumerator(Label length,
                                 Label max_length = kDefaultEnumerationLimit);

  std::optional<Permutation> next();

 private:
  std::vector<Label> current_;
  bool exhausted_;
  bool first_;
};

struct EnumeratedTree {
  std::uint64_t rank;  // position in lexicographic permutation order
  Permutation perm;
  KidVector kids;
};

/// perm_to_tree over all permutations of length dn, lexicographically.
/// "Tree #r" everywhere in this project means row r of this stream.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(const TreeShape& shape,
                          ChildPolicy policy = ChildPolicy::SmallestLabel,
                          Label max_length = kDefaultEnumerationLimit);

  std::optional<EnumeratedTree> next();

 private:
  TreeShape shape_;
  ChildPolicy policy_;
  PermutationEnumerator perms_;
  std::uint64_t rank_;
};

/// Canonical label-free encoding of a tree's structure: preorder markers,
/// 'N' for a node (followed by its d child encodings in order), 'L' for a
/// leaf. Equal keys iff the trees are identical after erasing labels.
std::string shape_key(const KidVector& kids);

/// Multiplicity of every distinct shape over the full labeled enumeration.
struct ShapeCensus {
  std::map<std::string, std::uint64_t> multiplicity;
  std::uint64_t total = 0;
};

ShapeCensus shape_census(const TreeShape& shape,
                         Label max_length = kDefaultEnumerationLimit);

/// Number of distinct shapes over enumerate-all-trees. Equals
/// fuss_catalan(d, n); tests hold the two routes together.
BigCount count_shapes(const TreeShape& shape,
                      Label max_length = kDefaultEnumerationLimit);

}  // namespace treeperm

#endif  // TREEPERM_ENUMERATION_HPP

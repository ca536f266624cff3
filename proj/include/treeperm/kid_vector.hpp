#ifndef TREEPERM_KID_VECTOR_HPP
#define TREEPERM_KID_VECTOR_HPP

#include <vector>

#include "treeperm/shape.hpp"

namespace treeperm {

/// Child-pointer representation of a labeled tree: kids[d*q + r] is the
/// label of the r-th child of node q. Every label in {0,...,dn} appears
/// exactly once except the root. Instances are always validated.
class KidVector {
 public:
  /// Full validation: length, label range, uniqueness, unique absent
  /// label, and acyclic parent chains. Throws Error with one of
  /// WrongLength, LabelOutOfRange, DuplicateChild, NoUniqueRoot,
  /// CycleDetected; messages name the offending index or label.
  static KidVector validated(const TreeShape& shape, std::vector<Label> kids);

  const TreeShape& shape() const noexcept { return shape_; }
  const std::vector<Label>& kids() const noexcept { return kids_; }

  /// Label of the r-th child of node q at sprout k = d*q + r.
  Label child_at(Label sprout) const {
    return kids_[static_cast<std::size_t>(sprout)];
  }

  /// The unique label absent from kids.
  Label root() const noexcept { return root_; }

  friend bool operator==(const KidVector& a, const KidVector& b) {
    return a.shape_ == b.shape_ && a.kids_ == b.kids_;
  }

 private:
  KidVector(TreeShape shape, std::vector<Label> kids, Label root)
      : shape_(shape), kids_(std::move(kids)), root_(root) {}

  TreeShape shape_;
  std::vector<Label> kids_;
  Label root_;
};

/// The unique label in {0,...,dn} not present in kids; 0 when n = 0.
Label root_label(const KidVector& kids);

}  // namespace treeperm

#endif  // TREEPERM_KID_VECTOR_HPP

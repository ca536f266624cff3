#ifndef TREEPERM_PERMUTATION_HPP
#define TREEPERM_PERMUTATION_HPP

#include <vector>

#include "treeperm/shape.hpp"

namespace treeperm {

/// A bijection on {0,...,L-1}, stored as the value sequence.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `entries` hits every value in {0,...,L-1} exactly once.
  static Permutation from_entries(std::vector<Label> entries);

  static Permutation identity(Label length);

  Label length() const noexcept { return static_cast<Label>(entries_.size()); }
  Label operator[](Label i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Label>& entries() const noexcept { return entries_; }

  /// inv with inv[entries[i]] == i.
  std::vector<Label> inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Label> entries) : entries_(std::move(entries)) {}

  std::vector<Label> entries_;
};

}  // namespace treeperm

#endif  // TREEPERM_PERMUTATION_HPP

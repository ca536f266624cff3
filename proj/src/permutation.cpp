#include "treeperm/permutation.hpp"

#include <numeric>
#include <string>

#include "treeperm/error.hpp"

namespace treeperm {

Permutation Permutation::from_entries(std::vector<Label> entries) {
  const Label length = static_cast<Label>(entries.size());
  std::vector<bool> seen(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Label v = entries[i];
    if (v < 0 || v >= length) {
      throw Error(ErrorCode::InvalidPermutation,
                  "entry " + std::to_string(v) + " at position " +
                      std::to_string(i) + " is outside {0,...," +
                      std::to_string(length - 1) + "}");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidPermutation,
                  "entry " + std::to_string(v) + " appears more than once");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::identity(Label length) {
  std::vector<Label> entries(static_cast<std::size_t>(length));
  std::iota(entries.begin(), entries.end(), Label{0});
  return Permutation(std::move(entries));
}

std::vector<Label> Permutation::inverse() const {
  std::vector<Label> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[static_cast<std::size_t>(entries_[i])] = static_cast<Label>(i);
  }
  return inv;
}

}  // namespace treeperm

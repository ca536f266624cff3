#include "treeperm/sampler.hpp"

#include <numeric>
#include <utility>

#include "treeperm/error.hpp"

namespace treeperm {

std::uint64_t SeededGenerator::below(std::uint64_t bound) {
  if (bound == 0) {
    throw Error(ErrorCode::LabelOutOfRange, "bounded draw with bound 0");
  }
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  std::uint64_t draw;
  do {
    draw = engine_() & mask;
  } while (draw >= bound);
  return draw;
}

Permutation sample_permutation(SeededGenerator& gen, Label length) {
  if (length < 0) {
    throw Error(ErrorCode::LabelOutOfRange,
                "negative permutation length " + std::to_string(length));
  }
  std::vector<Label> entries(static_cast<std::size_t>(length));
  std::iota(entries.begin(), entries.end(), Label{0});
  for (std::size_t i = entries.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(gen.below(i));
    std::swap(entries[i - 1], entries[j]);
  }
  return Permutation::from_entries(std::move(entries));
}

KidVector sample_tree(SeededGenerator& gen, const TreeShape& shape,
                      ChildPolicy policy) {
  return perm_to_tree(sample_permutation(gen, shape.edge_count()), shape,
                      policy);
}

}  // namespace treeperm

#ifndef TREEPERM_SAMPLER_HPP
#define TREEPERM_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "treeperm/bijection.hpp"
#include "treeperm/kid_vector.hpp"
#include "treeperm/permutation.hpp"

namespace treeperm {

/// Deterministic seeded source of uniform draws. The engine is
/// std::mt19937_64 seeded directly with the 64-bit seed; its output
/// sequence is fixed by the C++ standard, so identical seeds reproduce
/// identical samples on every platform. Single-owner; for parallel
/// streams derive one generator per stream via `stream`.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Seed-splitting convention: stream i uses seed base + i (wrapping).
  static SeededGenerator stream(std::uint64_t base_seed, std::uint64_t index) {
    return SeededGenerator(base_seed + index);
  }

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound >= 1, by bitmask rejection: draw the
  /// smallest power-of-two window covering bound and retry values that
  /// land beyond it. No modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Unbiased swap shuffle of the identity: positions are fixed from the
/// back, each swapped with a uniformly chosen not-yet-fixed index.
Permutation sample_permutation(SeededGenerator& gen, Label length);

/// perm_to_tree of a uniform permutation: uniform over all (dn)!
/// labeled trees of the shape.
KidVector sample_tree(SeededGenerator& gen, const TreeShape& shape,
                      ChildPolicy policy = ChildPolicy::SmallestLabel);

}  // namespace treeperm

#endif  // TREEPERM_SAMPLER_HPP

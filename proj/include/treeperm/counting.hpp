#ifndef TREEPERM_COUNTING_HPP
#define TREEPERM_COUNTING_HPP

#include <gmpxx.h>

#include <string>

#include "treeperm/permutation.hpp"
#include "treeperm/shape.hpp"

namespace treeperm {

/// Exact nonnegative count. No floating point anywhere in counting.
using BigCount = mpz_class;

BigCount factorial(Label n);

/// Multiplicative formula with exact division at every step; the
/// divisions are asserted exact (InternalCorruption otherwise).
BigCount binomial(Label n, Label k);

/// binom(2n, n) / (n + 1).
BigCount catalan(Label n);

/// binom(dn, n) / m with m = (d-1)n + 1: the number of unlabeled
/// n-node d-ary trees.
BigCount fuss_catalan(Label d, Label n);

/// (dn)!: the number of labeled n-node d-ary trees.
BigCount labeled_count(Label d, Label n);

std::string to_decimal(const BigCount& value);

/// Lexicographic rank of perm among all permutations of its length.
BigCount rank_perm(const Permutation& perm);

/// Inverse of rank_perm; throws RankOutOfRange unless 0 <= rank < length!.
Permutation unrank_perm(const BigCount& rank, Label length);

}  // namespace treeperm

#endif  // TREEPERM_COUNTING_HPP

#include "treeperm/counting.hpp"

#include <string>
#include <utility>

#include "treeperm/error.hpp"

namespace treeperm {

BigCount factorial(Label n) {
  if (n < 0) {
    throw Error(ErrorCode::LabelOutOfRange,
                "factorial of negative " + std::to_string(n));
  }
  BigCount acc = 1;
  for (Label i = 2; i <= n; ++i) acc *= static_cast<unsigned long>(i);
  return acc;
}

BigCount binomial(Label n, Label k) {
  if (n < 0 || k < 0) {
    throw Error(ErrorCode::LabelOutOfRange, "binomial with negative argument");
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; every intermediate quotient is exact because each
  // prefix is itself a binomial coefficient.
  BigCount acc = 1;
  for (Label i = 1; i <= k; ++i) {
    acc *= static_cast<unsigned long>(n - k + i);
    BigCount q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(),
                   static_cast<unsigned long>(i));
    if (r != 0) {
      throw Error(ErrorCode::InternalCorruption,
                  "binomial prefix not divisible at i=" + std::to_string(i));
    }
    acc = std::move(q);
  }
  return acc;
}

BigCount catalan(Label n) {
  if (n < 0) {
    throw Error(ErrorCode::LabelOutOfRange,
                "catalan of negative " + std::to_string(n));
  }
  BigCount q, r;
  const BigCount central = binomial(2 * n, n);
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), central.get_mpz_t(),
                 static_cast<unsigned long>(n + 1));
  if (r != 0) {
    throw Error(ErrorCode::InternalCorruption,
                "binom(2n,n) not divisible by n+1 at n=" + std::to_string(n));
  }
  return q;
}

BigCount fuss_catalan(Label d, Label n) {
  const TreeShape shape(d, n);
  const Label m = shape.leaf_count();
  BigCount q, r;
  const BigCount top = binomial(shape.edge_count(), n);
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                 static_cast<unsigned long>(m));
  if (r != 0) {
    throw Error(ErrorCode::InternalCorruption,
                "binom(dn,n) not divisible by (d-1)n+1 for d=" +
                    std::to_string(d) + " n=" + std::to_string(n));
  }
  return q;
}

BigCount labeled_count(Label d, Label n) {
  return factorial(TreeShape(d, n).edge_count());
}

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

BigCount rank_perm(const Permutation& perm) {
  const Label len = perm.length();
  // Lehmer code accumulated into a factorial-base value.
  BigCount rank = 0;
  for (Label i = 0; i < len; ++i) {
    Label smaller_later = 0;
    for (Label j = i + 1; j < len; ++j) {
      if (perm[j] < perm[i]) ++smaller_later;
    }
    rank *= static_cast<unsigned long>(len - i);
    rank += static_cast<unsigned long>(smaller_later);
  }
  return rank;
}

Permutation unrank_perm(const BigCount& rank, Label length) {
  if (length < 0) {
    throw Error(ErrorCode::LabelOutOfRange,
                "negative permutation length " + std::to_string(length));
  }
  if (rank < 0 || rank >= factorial(length)) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + to_decimal(rank) + " outside [0, " +
                    to_decimal(factorial(length)) + ") for length " +
                    std::to_string(length));
  }

  // Peel factorial-base digits from the most significant end.
  std::vector<Label> digits(static_cast<std::size_t>(length), 0);
  BigCount rest = rank;
  for (Label i = length; i >= 1; --i) {
    BigCount q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                   static_cast<unsigned long>(length - i + 1));
    digits[static_cast<std::size_t>(i - 1)] =
        static_cast<Label>(r.get_ui());
    rest = std::move(q);
  }

  std::vector<Label> pool(static_cast<std::size_t>(length));
  for (Label v = 0; v < length; ++v) pool[static_cast<std::size_t>(v)] = v;
  std::vector<Label> out;
  out.reserve(pool.size());
  for (Label i = 0; i < length; ++i) {
    const auto at = static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]);
    out.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return Permutation::from_entries(std::move(out));
}

}  // namespace treeperm

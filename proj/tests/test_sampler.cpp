#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "treeperm/counting.hpp"
#include "treeperm/error.hpp"
#include "treeperm/sampler.hpp"

using namespace treeperm;

TEST_SUITE_BEGIN("seeded generator");

TEST_CASE("engine output is the standard-pinned sequence") {
  // The standard fixes the 10000th draw of a default-seeded mt19937_64;
  // seeding with the default seed must reproduce it. Everything
  // downstream (and every documented seed) rests on this pin.
  SeededGenerator gen(std::mt19937_64::default_seed);
  std::uint64_t draw = 0;
  for (int i = 0; i < 10000; ++i) draw = gen.next();
  CHECK(draw == 9981545732273789042ULL);
}

TEST_CASE("same seed, same stream") {
  SeededGenerator a(7), b(7), c(8);
  bool all_equal = true;
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t x = a.next();
    all_equal &= (x == b.next());
    differs |= (x != c.next());
  }
  CHECK(all_equal);
  CHECK(differs);
  CHECK(a.seed() == 7);
}

TEST_CASE("stream splitting is seed addition") {
  SeededGenerator direct(105);
  SeededGenerator split = SeededGenerator::stream(100, 5);
  CHECK(split.seed() == 105);
  for (int i = 0; i < 50; ++i) REQUIRE(split.next() == direct.next());
}

TEST_CASE("bounded draws") {
  SeededGenerator gen(1);

  SUBCASE("stay in range and reach every value") {
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 3000; ++i) {
      const std::uint64_t v = gen.below(6);
      REQUIRE(v < 6);
      seen.insert(v);
    }
    CHECK(seen.size() == 6);
  }

  SUBCASE("degenerate bound") {
    for (int i = 0; i < 32; ++i) REQUIRE(gen.below(1) == 0);
  }

  SUBCASE("bound past the mask boundary") {
    // 2^63 + 1 forces the all-ones mask and real rejections.
    const std::uint64_t bound = (1ULL << 63) + 1;
    for (int i = 0; i < 64; ++i) REQUIRE(gen.below(bound) < bound);
  }

  SUBCASE("zero bound is refused") {
    CHECK_THROWS_AS(gen.below(0), Error);
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("uniform sampling");

TEST_CASE("golden seed 42") {
  SeededGenerator gen(42);
  CHECK(sample_permutation(gen, 4).entries() ==
        std::vector<Label>{1, 3, 0, 2});

  SeededGenerator fresh(42);
  const KidVector first = sample_tree(fresh, TreeShape(2, 2));
  CHECK(first.kids() == std::vector<Label>{4, 2, 0, 3});
  CHECK(first.root() == 1);
  const KidVector second = sample_tree(fresh, TreeShape(2, 2));
  CHECK(second.kids() == std::vector<Label>{3, 4, 0, 2});
}

TEST_CASE("samples are always valid") {
  SeededGenerator gen(3);
  for (int i = 0; i < 200; ++i) {
    const KidVector kids = sample_tree(gen, TreeShape(3, 3));
    REQUIRE(kids.kids().size() == 9);
  }
  CHECK(sample_permutation(gen, 0).length() == 0);
  CHECK(sample_permutation(gen, 1).entries() == std::vector<Label>{0});
  CHECK_THROWS_AS(sample_permutation(gen, -1), Error);
}

TEST_CASE("small support is covered quickly") {
  SeededGenerator gen(11);
  std::set<std::vector<Label>> seen;
  for (int i = 0; i < 600; ++i) {
    seen.insert(sample_permutation(gen, 3).entries());
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("frequencies pass chi-square at length 4") {
  // Documented seed 20260817; 120,000 draws over 24 cells, expected 5000
  // per cell. 41.638398118858476 is the 99th percentile of chi2 with 23
  // degrees of freedom.
  SeededGenerator gen(20260817);
  std::vector<std::uint64_t> hits(24, 0);
  for (int i = 0; i < 120000; ++i) {
    const Permutation perm = sample_permutation(gen, 4);
    ++hits[static_cast<std::size_t>(rank_perm(perm).get_ui())];
  }
  double stat = 0.0;
  for (std::uint64_t h : hits) {
    REQUIRE(h > 0);
    const double diff = static_cast<double>(h) - 5000.0;
    stat += diff * diff / 5000.0;
  }
  CHECK(stat < 41.638398118858476);
}

TEST_SUITE_END();

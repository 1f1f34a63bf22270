#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lperiod/errors.hpp"
#include "lperiod/weyl.hpp"
#include "support/weyl_reference.hpp"

using namespace lperiod;

TEST_CASE("minimal representatives, known counts") {
  // Bijective with nonnegative integer matrices; (2,1) vs (1,2) has two.
  CHECK(enumerate_min_reps(Composition({2, 1}), Composition({1, 2})).size() == 2);
  // Full flag on both sides: all of S_3.
  CHECK(enumerate_min_reps(Composition({1, 1, 1}), Composition({1, 1, 1})).size() == 6);
  // One side trivial: a single double coset.
  CHECK(enumerate_min_reps(Composition({3}), Composition({1, 1, 1})).size() == 1);
  CHECK(enumerate_min_reps(Composition({1, 1, 1}), Composition({3})).size() == 1);
  CHECK(enumerate_min_reps(Composition({5}), Composition({5})).size() == 1);
}

TEST_CASE("minimal representatives match the factorial oracle") {
  for (int n = 1; n <= 5; ++n) {
    auto comps = compositions_of(n);
    for (const auto& p : comps)
      for (const auto& q : comps) {
        auto mine = enumerate_min_reps(p, q);
        auto ref = testsupport::reference_double_cosets(p, q);
        REQUIRE(static_cast<long long>(mine.size()) == ref.num_cosets);
        for (size_t i = 0; i < mine.size(); ++i) {
          CHECK(mine[i].perm == ref.min_reps[i]);
          CHECK(is_two_sided_block_increasing(mine[i]));
        }
      }
  }
}

TEST_CASE("weyl element lengths and inverses") {
  auto reps = enumerate_min_reps(Composition({2, 1}), Composition({1, 2}));
  for (const auto& w : reps) {
    auto inv = w.inverse_perm();
    for (size_t i = 0; i < w.perm.size(); ++i)
      CHECK(inv[static_cast<size_t>(w.perm[i])] == static_cast<int>(i));
    CHECK(w.length() >= 0);
  }
}

TEST_CASE("levi-embedding representatives") {
  // (2,3) into (3,2): the block swap only.
  auto ws = w_p_semicolon_q(Composition({2, 3}), Composition({3, 2}));
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].perm == std::vector<int>{3, 4, 0, 1, 2});

  // Two singleton blocks into one: only the identity is minimal.
  auto collapse = w_p_semicolon_q(Composition({1, 1}), Composition({2}));
  REQUIRE(collapse.size() == 1);
  CHECK(collapse[0].perm == std::vector<int>{0, 1});

  // Every levi-embedding representative is a minimal representative.
  auto p = Composition({1, 2, 1});
  auto q = Composition({2, 2});
  auto subset = w_p_semicolon_q(p, q);
  auto all = enumerate_min_reps(p, q);
  for (const auto& w : subset) {
    CHECK(is_two_sided_block_increasing(w));
    CHECK(std::find(all.begin(), all.end(), w) != all.end());
  }
}

TEST_CASE("associate compositions and block permutations") {
  CHECK(are_associate(Composition({2, 3}), Composition({3, 2})));
  CHECK_FALSE(are_associate(Composition({2, 3}), Composition({2, 2, 1})));
  CHECK(w_p_q(Composition({2, 3}), Composition({1, 4})).empty());
  CHECK(w_p_q(Composition({2, 3}), Composition({2, 2, 1})).empty());

  auto bps = w_p_q(Composition({2, 3}), Composition({3, 2}));
  REQUIRE(bps.size() == 1);
  CHECK(bps[0].sigma == std::vector<int>{1, 0});
  CHECK(bps[0].underlying.perm == std::vector<int>{3, 4, 0, 1, 2});

  // Repeated part sizes: all block bijections matching sizes.
  CHECK(w_p_q(Composition({1, 1, 2}), Composition({1, 2, 1})).size() == 2);
  CHECK(w_p_q(Composition({1, 1, 1}), Composition({1, 1, 1})).size() == 6);
}

TEST_CASE("block permutation from sigma and inverted roots") {
  Composition p({1, 1, 1});
  auto bp = block_permutation_from_sigma(p, {1, 2, 0});
  CHECK(bp.sigma == std::vector<int>{1, 2, 0});
  CHECK(bp.underlying.source == p);
  CHECK(bp.underlying.target == p.permuted({1, 2, 0}));

  // Blocks 1,2,3 land at positions 3,1,2 (1-based): pairs (1,2) and (1,3) invert.
  auto roots = inverted_roots(bp);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<int, int>{0, 1});
  CHECK(roots[1] == std::pair<int, int>{0, 2});

  CHECK(inverted_roots(block_permutation_from_sigma(p, {0, 1, 2})).empty());
  auto rev = inverted_roots(block_permutation_from_sigma(p, {2, 1, 0}));
  CHECK(rev.size() == 3);

  CHECK_THROWS_AS(block_permutation_from_sigma(p, {0, 0, 1}), DomainError);   // repeat
  CHECK_THROWS_AS(block_permutation_from_sigma(p, {0, 1}), DomainError);      // short
  CHECK_THROWS_AS(block_permutation_from_sigma(p, {0, 1, 3}), DomainError);   // range

  // A valid swap on unequal parts is fine: it just changes the target shape.
  auto swapped = block_permutation_from_sigma(Composition({1, 2}), {1, 0});
  CHECK(swapped.underlying.target == Composition({2, 1}));
}

TEST_CASE("underlying permutation consistency") {
  // The underlying Weyl element must carry source block sigma[p] onto target
  // slot p, ascending inside each block.
  Composition p({2, 1, 3});
  for (const auto& bp : w_p_q(p, Composition({3, 2, 1}))) {
    const auto& w = bp.underlying;
    CHECK(w.target == p.permuted(bp.sigma));
    for (int tb = 0; tb < w.target.size(); ++tb) {
      int sb = bp.sigma[static_cast<size_t>(tb)];
      for (int off = 0; off < p.part(sb); ++off)
        CHECK(w.perm[static_cast<size_t>(p.block_begin(sb) + off)] ==
              w.target.block_begin(tb) + off);
    }
  }
}

TEST_CASE("weyl size cap") {
  CHECK_THROWS_AS(enumerate_min_reps(Composition({6, 6}), Composition({6, 6})), DomainError);
}

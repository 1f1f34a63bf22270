#pragma once

#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "lperiod/cuspidal_datum.hpp"
#include "lperiod/lexpr.hpp"

namespace lperiod::testsupport {

inline CuspidalDatum make_datum(std::vector<int> parts, std::vector<std::string> labels, int n,
                                int m, std::map<std::string, std::string> dual = {}) {
  return CuspidalDatum(Composition(std::move(parts)), std::move(labels), dual, n, m);
}

// Number of subsets of `parts` summing to n, by dynamic programming.
// Deliberately shares no code with enumerate_fix.
inline long long subset_sum_count(const std::vector<int>& parts, int n) {
  if (n < 0) return 0;
  std::vector<long long> dp(static_cast<size_t>(n) + 1, 0);
  dp[0] = 1;
  for (int p : parts)
    for (int s = n; s >= p; --s) dp[static_cast<size_t>(s)] += dp[static_cast<size_t>(s - p)];
  return dp[static_cast<size_t>(n)];
}

struct RandomDatumConfig {
  int k_max = 6;
  int part_max = 4;
};

// Random datum with label repeats and dual pairs.  Labels are drawn per block
// size ("a3", "u3", "u3x", ...) so that equal labels and dual partners always
// sit on blocks of equal rank, as the constructor requires.
inline CuspidalDatum random_datum(std::mt19937& rng, const RandomDatumConfig& cfg = {}) {
  std::uniform_int_distribution<int> kd(1, cfg.k_max);
  std::uniform_int_distribution<int> pd(1, cfg.part_max);
  int k = kd(rng);
  std::vector<int> parts(static_cast<size_t>(k));
  int total = 0;
  for (int& p : parts) {
    p = pd(rng);
    total += p;
  }
  std::uniform_int_distribution<int> nd(0, total / 2);
  int n = nd(rng);
  int m = total - 2 * n;

  std::map<std::string, std::string> dual;
  std::vector<std::string> labels(static_cast<size_t>(k));
  std::uniform_int_distribution<int> ld(0, 3);
  for (int i = 0; i < k; ++i) {
    std::string s = std::to_string(parts[static_cast<size_t>(i)]);
    switch (ld(rng)) {
      case 0: labels[static_cast<size_t>(i)] = "a" + s; break;
      case 1: labels[static_cast<size_t>(i)] = "b" + s; break;
      case 2:
        labels[static_cast<size_t>(i)] = "u" + s;
        dual["u" + s] = "u" + s + "x";
        break;
      default:
        labels[static_cast<size_t>(i)] = "u" + s + "x";
        dual["u" + s] = "u" + s + "x";
        break;
    }
  }
  return CuspidalDatum(Composition(std::move(parts)), std::move(labels), dual, n, m);
}

// Random datum whose total rank fits under the Weyl construction cap, for
// sweeps that cross-check against the double-coset machinery.
inline CuspidalDatum random_weyl_datum(std::mt19937& rng, int total_max = 10,
                                       const RandomDatumConfig& cfg = {}) {
  for (;;) {
    CuspidalDatum d = random_datum(rng, cfg);
    if (d.total() <= total_max) return d;
  }
}

// The Rankin-Selberg leaves of a term (a product node or a bare leaf) in the
// given completion, as a list suitable for multiset comparison after sorting.
inline std::vector<RankinSelbergLeaf> rs_leaves(const LExpr& term, Completion comp) {
  std::vector<RankinSelbergLeaf> out;
  auto consider = [&](const LExpr& e) {
    if (e.kind() != LExpr::Kind::leaf) return;
    if (const auto* rs = std::get_if<RankinSelbergLeaf>(&e.as_leaf()))
      if (rs->completion == comp) out.push_back(*rs);
  };
  if (term.kind() == LExpr::Kind::product)
    for (const LExpr& f : term.children()) consider(f);
  else
    consider(term);
  return out;
}

}  // namespace lperiod::testsupport

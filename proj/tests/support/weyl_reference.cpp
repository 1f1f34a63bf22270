#include "support/weyl_reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lperiod::testsupport {

namespace {

// Precomputed one-line listings of S_n plus neighbor tables for multiplying
// by an adjacent transposition on either side.  Built once per n and cached;
// with n <= 8 the largest table is 7 x 40320 ints per side.
struct StepTables {
  int n = 0;
  std::vector<std::vector<int>> perms;       // id -> one-line, lexicographic
  std::vector<std::vector<int>> left_step;   // [j][id]: id of (j j+1) * w  (swap values)
  std::vector<std::vector<int>> right_step;  // [j][id]: id of w * (j j+1)  (swap entries)
  std::vector<int> inversions;               // Coxeter length
};

int rank_of(const std::vector<int>& p) {
  // Lehmer code in the mixed-radix accumulation form.
  int n = static_cast<int>(p.size());
  long long r = 0;
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++c;
    r = r * (n - i) + c;
  }
  return static_cast<int>(r);
}

const StepTables& tables_for(int n) {
  static std::map<int, StepTables> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1 || n > 8) throw std::logic_error("reference oracle: n out of range");

  StepTables t;
  t.n = n;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    t.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  int total = static_cast<int>(t.perms.size());
  int ngen = n > 1 ? n - 1 : 0;
  t.left_step.assign(static_cast<size_t>(ngen), std::vector<int>(static_cast<size_t>(total)));
  t.right_step.assign(static_cast<size_t>(ngen), std::vector<int>(static_cast<size_t>(total)));
  t.inversions.resize(static_cast<size_t>(total));

  std::vector<int> pos(static_cast<size_t>(n));
  for (int id = 0; id < total; ++id) {
    const std::vector<int>& w = t.perms[static_cast<size_t>(id)];
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      pos[static_cast<size_t>(w[static_cast<size_t>(i)])] = i;
      for (int j = i + 1; j < n; ++j)
        if (w[static_cast<size_t>(j)] < w[static_cast<size_t>(i)]) ++inv;
    }
    t.inversions[static_cast<size_t>(id)] = inv;
    for (int j = 0; j < ngen; ++j) {
      std::vector<int> q = w;
      std::swap(q[static_cast<size_t>(j)], q[static_cast<size_t>(j + 1)]);
      t.right_step[static_cast<size_t>(j)][static_cast<size_t>(id)] = rank_of(q);
      q = w;
      std::swap(q[static_cast<size_t>(pos[static_cast<size_t>(j)])],
                q[static_cast<size_t>(pos[static_cast<size_t>(j + 1)])]);
      t.left_step[static_cast<size_t>(j)][static_cast<size_t>(id)] = rank_of(q);
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

DoubleCosetReference reference_double_cosets(const Composition& P, const Composition& Q) {
  if (P.total() != Q.total())
    throw std::logic_error("reference oracle: compositions of different totals");
  int n = P.total();
  const StepTables& t = tables_for(n);
  int total = static_cast<int>(t.perms.size());

  // Right generators: transpositions of adjacent positions inside a P-block.
  // Left generators: transpositions of adjacent values inside a Q-block.
  std::vector<int> gens_p, gens_q;
  for (int j = 0; j + 1 < n; ++j) {
    if (P.block_of(j) == P.block_of(j + 1)) gens_p.push_back(j);
    if (Q.block_of(j) == Q.block_of(j + 1)) gens_q.push_back(j);
  }

  std::vector<char> seen(static_cast<size_t>(total), 0);
  std::vector<int> stack;
  DoubleCosetReference out;

  for (int root = 0; root < total; ++root) {
    if (seen[static_cast<size_t>(root)]) continue;
    ++out.num_cosets;
    int best = root;
    int best_inv = t.inversions[static_cast<size_t>(root)];
    int best_count = 1;
    seen[static_cast<size_t>(root)] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      auto visit = [&](int nb) {
        if (seen[static_cast<size_t>(nb)]) return;
        seen[static_cast<size_t>(nb)] = 1;
        stack.push_back(nb);
        int inv = t.inversions[static_cast<size_t>(nb)];
        if (inv < best_inv) {
          best = nb;
          best_inv = inv;
          best_count = 1;
        } else if (inv == best_inv) {
          ++best_count;
        }
      };
      for (int j : gens_p) visit(t.right_step[static_cast<size_t>(j)][static_cast<size_t>(id)]);
      for (int j : gens_q) visit(t.left_step[static_cast<size_t>(j)][static_cast<size_t>(id)]);
    }
    if (best_count != 1)
      throw std::logic_error("reference oracle: minimal-length element not unique");
    out.min_reps.push_back(t.perms[static_cast<size_t>(best)]);
  }

  std::sort(out.min_reps.begin(), out.min_reps.end());
  return out;
}

}  // namespace lperiod::testsupport

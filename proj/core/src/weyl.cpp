#include "lperiod/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "lperiod/errors.hpp"

namespace lperiod {

std::vector<int> WeylElement::inverse_perm() const {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[static_cast<size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

int WeylElement::length() const {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions;
}

bool is_two_sided_block_increasing(const WeylElement& w) {
  const Composition& P = w.source;
  for (int b = 0; b < P.size(); ++b)
    for (int p = P.block_begin(b); p + 1 < P.block_end(b); ++p)
      if (w.perm[static_cast<size_t>(p)] > w.perm[static_cast<size_t>(p + 1)]) return false;
  const Composition& Q = w.target;
  std::vector<int> inv = w.inverse_perm();
  for (int b = 0; b < Q.size(); ++b)
    for (int p = Q.block_begin(b); p + 1 < Q.block_end(b); ++p)
      if (inv[static_cast<size_t>(p)] > inv[static_cast<size_t>(p + 1)]) return false;
  return true;
}

namespace {

void check_weyl_args(const Composition& P, const Composition& Q) {
  if (P.total() != Q.total())
    throw DomainError("precondition", "compositions " + P.str() + " and " + Q.str() +
                                          " have different totals");
  if (P.total() > kWeylMaxTotal)
    throw DomainError("caps", "total " + std::to_string(P.total()) + " exceeds the Weyl cap " +
                                  std::to_string(kWeylMaxTotal));
}

// The minimal-length element of W_Q w W_P is reconstructed from the cell
// matrix A[qb][pb] = #(positions of source block pb sent into target block
// qb): fill each target block in order, drawing sources grouped by ascending
// source block.  That makes w increasing on source blocks and w^{-1}
// increasing on target blocks, which pins the representative uniquely.
WeylElement min_rep_from_cells(const Composition& P, const Composition& Q,
                               const std::vector<std::vector<int>>& cells) {
  std::vector<int> perm(static_cast<size_t>(P.total()));
  std::vector<int> next_source(static_cast<size_t>(P.size()));
  for (int pb = 0; pb < P.size(); ++pb) next_source[static_cast<size_t>(pb)] = P.block_begin(pb);
  for (int qb = 0; qb < Q.size(); ++qb) {
    int target = Q.block_begin(qb);
    for (int pb = 0; pb < P.size(); ++pb)
      for (int c = 0; c < cells[static_cast<size_t>(qb)][static_cast<size_t>(pb)]; ++c)
        perm[static_cast<size_t>(next_source[static_cast<size_t>(pb)]++)] = target++;
  }
  return WeylElement{std::move(perm), P, Q};
}

// Enumerate all nonnegative integer matrices with row sums Q.parts and column
// sums P.parts, invoking f on each.  Cells are filled row-major; the partial
// column budgets prune the search.
template <typename F>
void for_each_cell_matrix(const Composition& P, const Composition& Q, F&& f) {
  const int rows = Q.size(), cols = P.size();
  std::vector<std::vector<int>> cells(static_cast<size_t>(rows),
                                      std::vector<int>(static_cast<size_t>(cols), 0));
  std::vector<int> col_left(static_cast<size_t>(cols));
  for (int c = 0; c < cols; ++c) col_left[static_cast<size_t>(c)] = P.part(c);

  auto rec = [&](auto&& self, int r, int c, int row_left) -> void {
    if (c == cols) {
      if (row_left != 0) return;  // row sum missed
      if (r + 1 == rows) {
        f(cells);
        return;
      }
      self(self, r + 1, 0, Q.part(r + 1));
      return;
    }
    int hi = std::min(row_left, col_left[static_cast<size_t>(c)]);
    for (int v = 0; v <= hi; ++v) {
      cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      col_left[static_cast<size_t>(c)] -= v;
      self(self, r, c + 1, row_left - v);
      col_left[static_cast<size_t>(c)] += v;
    }
    cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
  };
  rec(rec, 0, 0, Q.part(0));
}

void sort_by_one_line(std::vector<WeylElement>& v) {
  std::sort(v.begin(), v.end(),
            [](const WeylElement& a, const WeylElement& b) { return a.perm < b.perm; });
}

}  // namespace

std::vector<WeylElement> enumerate_min_reps(const Composition& P, const Composition& Q) {
  check_weyl_args(P, Q);
  std::vector<WeylElement> out;
  for_each_cell_matrix(P, Q, [&](const std::vector<std::vector<int>>& cells) {
    out.push_back(min_rep_from_cells(P, Q, cells));
  });
  sort_by_one_line(out);
  return out;
}

std::vector<WeylElement> w_p_semicolon_q(const Composition& P, const Composition& Q) {
  check_weyl_args(P, Q);
  // Levi containment means every source block lands inside one target block:
  // the cell matrix has exactly one nonzero entry per column.  Enumerate the
  // assignments source block -> target block directly.
  const int rows = Q.size(), cols = P.size();
  std::vector<WeylElement> out;
  std::vector<std::vector<int>> cells(static_cast<size_t>(rows),
                                      std::vector<int>(static_cast<size_t>(cols), 0));
  std::vector<int> room(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) room[static_cast<size_t>(r)] = Q.part(r);
  auto rec = [&](auto&& self, int pb) -> void {
    if (pb == cols) {
      for (int r = 0; r < rows; ++r)
        if (room[static_cast<size_t>(r)] != 0) return;
      out.push_back(min_rep_from_cells(P, Q, cells));
      return;
    }
    for (int qb = 0; qb < rows; ++qb) {
      if (room[static_cast<size_t>(qb)] < P.part(pb)) continue;
      room[static_cast<size_t>(qb)] -= P.part(pb);
      cells[static_cast<size_t>(qb)][static_cast<size_t>(pb)] = P.part(pb);
      self(self, pb + 1);
      cells[static_cast<size_t>(qb)][static_cast<size_t>(pb)] = 0;
      room[static_cast<size_t>(qb)] += P.part(pb);
    }
  };
  rec(rec, 0);
  sort_by_one_line(out);
  return out;
}

bool are_associate(const Composition& P, const Composition& Q) {
  if (P.total() != Q.total()) return false;
  std::vector<int> a = P.parts(), b = Q.parts();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

BlockPermutation block_permutation_from_sigma(const Composition& P, const std::vector<int>& sigma) {
  Composition Q = P.permuted(sigma);  // validates sigma
  // Source block sigma[p] occupies target block position p.
  std::vector<int> perm(static_cast<size_t>(P.total()));
  for (int p = 0; p < Q.size(); ++p) {
    int src = P.block_begin(sigma[static_cast<size_t>(p)]);
    for (int t = Q.block_begin(p); t < Q.block_end(p); ++t)
      perm[static_cast<size_t>(src++)] = t;
  }
  return BlockPermutation{sigma, WeylElement{std::move(perm), P, std::move(Q)}};
}

std::vector<BlockPermutation> w_p_q(const Composition& P, const Composition& Q) {
  check_weyl_args(P, Q);
  const int k = P.size();
  std::vector<BlockPermutation> out;
  if (Q.size() != k || !are_associate(P, Q)) return out;
  // Assign each target position p a source block of the matching size.
  std::vector<int> sigma(static_cast<size_t>(k), -1);
  std::vector<bool> used(static_cast<size_t>(k), false);
  auto rec = [&](auto&& self, int p) -> void {
    if (p == k) {
      out.push_back(block_permutation_from_sigma(P, sigma));
      return;
    }
    for (int b = 0; b < k; ++b) {
      if (used[static_cast<size_t>(b)] || P.part(b) != Q.part(p)) continue;
      used[static_cast<size_t>(b)] = true;
      sigma[static_cast<size_t>(p)] = b;
      self(self, p + 1);
      used[static_cast<size_t>(b)] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const BlockPermutation& a, const BlockPermutation& b) { return a.sigma < b.sigma; });
  return out;
}

std::vector<std::pair<int, int>> inverted_roots(const BlockPermutation& bp) {
  const int k = static_cast<int>(bp.sigma.size());
  std::vector<int> pos(static_cast<size_t>(k));
  for (int p = 0; p < k; ++p) pos[static_cast<size_t>(bp.sigma[static_cast<size_t>(p)])] = p;
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (pos[static_cast<size_t>(i)] > pos[static_cast<size_t>(j)]) out.emplace_back(i, j);
  return out;
}

}  // namespace lperiod

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lperiod/composition.hpp"

namespace lperiod {

// A permutation w of {0..N-1} carried together with the source and target
// compositions it mediates between.  `perm[i]` is the image of position i
// (one-line notation).  For the minimal double-coset representatives produced
// below, w is increasing on every source block and w^{-1} is increasing on
// every target block.
struct WeylElement {
  std::vector<int> perm;
  Composition source;
  Composition target;

  std::vector<int> inverse_perm() const;
  int length() const;  // number of inversions

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

// Construction cap: factorial-free, but the number of representatives can be
// as large as N! for the full flag; keep N modest.
constexpr int kWeylMaxTotal = 10;

// Is w increasing on every source block and w^{-1} increasing on every target
// block?  This characterizes minimal-length representatives of W_Q \ W / W_P.
bool is_two_sided_block_increasing(const WeylElement& w);

// All minimal-length representatives of the double cosets W_Q \ S_N / W_P,
// where W_P, W_Q are the Young subgroups of the compositions.  Sorted by
// one-line notation.  Bijective with nonnegative integer matrices whose row
// sums are Q.parts and column sums are P.parts.
std::vector<WeylElement> enumerate_min_reps(const Composition& P, const Composition& Q);

// Representatives w with w M_P w^{-1} contained in M_Q, i.e. every source
// block is carried into a single target block (image positions contiguous and
// ascending).  A subset of enumerate_min_reps(P, Q).
std::vector<WeylElement> w_p_semicolon_q(const Composition& P, const Composition& Q);

// A Weyl element that carries the Levi of P exactly onto the Levi of Q, i.e.
// permutes whole blocks.  `sigma` is the induced block permutation in
// one-line listing form: target block position p is occupied by source block
// sigma[p] (so Q.parts[p] == P.parts[sigma[p]]).
struct BlockPermutation {
  std::vector<int> sigma;
  WeylElement underlying;

  friend bool operator==(const BlockPermutation&, const BlockPermutation&) = default;
};

// All elements with w M_P w^{-1} = M_Q.  Nonempty iff P and Q are associate.
std::vector<BlockPermutation> w_p_q(const Composition& P, const Composition& Q);

// Associate parabolics: the parts agree as multisets.
bool are_associate(const Composition& P, const Composition& Q);

// Build the block permutation carrying P onto P permuted by sigma (the
// one-line listing above).  Throws if sigma is not a permutation of the block
// indices.
BlockPermutation block_permutation_from_sigma(const Composition& P, const std::vector<int>& sigma);

// Ordered source-block pairs (i, j), i < j, whose relative order the block
// permutation reverses: block i lands at a later target position than block
// j.  These are the positive roots of the source Levi made negative.  Sorted
// lexicographically.
std::vector<std::pair<int, int>> inverted_roots(const BlockPermutation& bp);

}  // namespace lperiod

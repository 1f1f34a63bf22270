#pragma once

#include <string>
#include <vector>

#include "lperiod/cuspidal_datum.hpp"
#include "lperiod/weyl.hpp"

namespace lperiod {

// A fixed point of the cuspidal-support action on the double-coset space of
// the symmetric subgroup GL_n x GL_{n+m}.  Combinatorially: a subset I of the
// blocks of the datum whose sizes sum to n.  The attached shuffle sigma lists
// I in increasing order followed by its complement in increasing order
// (one-line form: target position p holds source block sigma[p]); t = |I| is
// the split index.
struct FixedPoint {
  std::vector<int> subset;   // I, ascending, 0-based block indices
  int split = 0;             // t = |I|
  std::vector<int> sigma;    // length k, see above
  BlockPermutation bp;       // underlying Weyl element: source comp -> permuted comp

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

// The subgroup composition (n, n+m) with zero entries dropped.
Composition symmetric_subgroup_composition(const CuspidalDatum& datum);

// All fixed points of the datum, ordered lexicographically by subset.
std::vector<FixedPoint> enumerate_fix(const CuspidalDatum& datum);

// Cross-check of the two descriptions of the fixed-point set: the subset
// enumeration above against the Weyl-theoretic one (representatives carrying
// the Levi of the datum into the Levi of (n, n+m)).  Verifies the counts
// agree, that every fixed point's underlying permutation appears in
// w_p_semicolon_q, and that it conjugates the Levi onto the permuted one.
struct MatchReport {
  bool ok = true;
  std::string detail;  // first mismatch, empty when ok
};
MatchReport fix_matches_weyl(const CuspidalDatum& datum);

// One Rankin-Selberg factor of the tangent-space L-function at a fixed point:
// the pair (i, j) in I x I^c and which of the two slots is dualized.
enum class Orientation {
  dual_left,   // L(s, pi_i^dual x pi_j)
  dual_right,  // L(s, pi_i x pi_j^dual)
};
struct TangentFactor {
  int i = 0;  // block in I
  int j = 0;  // block in I^c
  Orientation orient = Orientation::dual_left;

  friend auto operator<=>(const TangentFactor&, const TangentFactor&) = default;
};

// The 2 * |I| * |I^c| factors of L(s, T_sigma), ordered by (i, j, orientation).
std::vector<TangentFactor> tangent_l_data(const CuspidalDatum& datum, const FixedPoint& fp);

// Does L(s, T_sigma) have a pole at s = 1?  Happens exactly when some block
// of I carries the same label as some block of the complement.
bool has_pole_at_one(const CuspidalDatum& datum, const FixedPoint& fp);

}  // namespace lperiod

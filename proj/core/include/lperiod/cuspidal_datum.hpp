#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lperiod/composition.hpp"

namespace lperiod {

// A cuspidal representation slot: opaque identifier, the identifier of its
// contragredient, and the GL-rank it lives on.  Slots compare componentwise;
// the algebra layer relies on this ordering for canonical forms.
struct RepRef {
  std::string label;
  std::string dual;
  int dim = 0;

  friend auto operator<=>(const RepRef&, const RepRef&) = default;
};

// Cuspidal datum on GL_{2n+m}: a composition (n_1,...,n_k) of N = 2n+m
// together with one representation label per block and a duality involution
// on labels.  Labels are opaque; equality of labels is equivalence of the
// representations they name.  Labels absent from the duality map are
// self-dual.  The same label may decorate several blocks (then the block
// sizes must agree), and the map is closed into a genuine involution at
// construction time.
class CuspidalDatum {
 public:
  static constexpr int kMaxBlocks = 20;

  CuspidalDatum(Composition parts, std::vector<std::string> labels,
                const std::map<std::string, std::string>& dual, int n, int m);

  const Composition& composition() const { return comp_; }
  int k() const { return comp_.size(); }
  int total() const { return comp_.total(); }  // N = 2n + m
  int n() const { return n_; }
  int m() const { return m_; }

  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& dual_of(const std::string& id) const;
  const std::map<std::string, std::string>& dual_map() const { return dual_; }

  // Representation attached to block i, and its contragredient.
  RepRef rep(int i) const;
  RepRef rep_dual(int i) const;

  // Datum with blocks rearranged: new block p is old block sigma[p].
  CuspidalDatum permuted(const std::vector<int>& sigma) const;

  // Datum with every label replaced by its dual (an involution on data).
  CuspidalDatum dualized() const;

  bool operator==(const CuspidalDatum&) const = default;

 private:
  Composition comp_;
  std::vector<std::string> labels_;
  std::map<std::string, std::string> dual_;  // total involution on the label closure
  int n_ = 0;
  int m_ = 0;
};

// The distinguished-orbit condition: for every subset I of blocks whose sizes
// sum to n, the labels on I are disjoint from the labels on its complement.
bool check_regularity(const CuspidalDatum& datum);

// Witness for a failed regularity check: the subset and the offending pair
// (block indices, 0-based) with equal labels across the cut.
struct RegularityViolation {
  std::vector<int> subset;
  int i = 0;
  int j = 0;
};
std::optional<RegularityViolation> first_regularity_violation(const CuspidalDatum& datum);

// Even datum: the multiset of (block size, label) pairs has every class with
// even multiplicity.  Implies k and N are even.
bool is_even(const CuspidalDatum& datum);

}  // namespace lperiod

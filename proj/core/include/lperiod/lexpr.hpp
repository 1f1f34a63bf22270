#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lperiod/cuspidal_datum.hpp"
#include "lperiod/rational.hpp"
#include "lperiod/weyl.hpp"

namespace lperiod {

// Where an automorphic L-factor is taken: the completed L-function, the
// partial one with the finite set S of places removed (L^S), or the finite
// product over the places of S only (L_S).  partial_s * local_s at the same
// point recombines to complete.
enum class Completion { complete, partial_s, local_s };

std::string to_string(Completion c);
Completion completion_from_string(const std::string& s);

// --- Leaf atoms -------------------------------------------------------------
//
// Every leaf is an exact symbolic object; no floating point anywhere.  Leaves
// order lexicographically by (kind, payload); Rankin-Selberg and epsilon
// leaves canonicalize the unordered pair of representations at construction.

struct RankinSelbergLeaf {
  RepRef left;
  RepRef right;
  Rational s;
  Completion completion = Completion::complete;

  RankinSelbergLeaf(RepRef a, RepRef b, Rational s_point, Completion comp);

  friend auto operator<=>(const RankinSelbergLeaf&, const RankinSelbergLeaf&) = default;
};

struct EpsilonLeaf {
  RepRef left;
  RepRef right;
  Rational s;

  EpsilonLeaf(RepRef a, RepRef b, Rational s_point);

  friend auto operator<=>(const EpsilonLeaf&, const EpsilonLeaf&) = default;
};

// Symbolic volume/measure constant, e.g. the Tamagawa-type constant of the
// symmetric subgroup.  `tag` identifies the constant, `s_tag` the place set
// decorating it.
struct TamagawaLeaf {
  std::string tag;
  std::string s_tag;

  friend auto operator<=>(const TamagawaLeaf&, const TamagawaLeaf&) = default;
};

// Symbolic Whittaker-Jacquet functional applied to the Levi Whittaker vector.
struct JacquetLeaf {
  std::string s_tag;

  friend auto operator<=>(const JacquetLeaf&, const JacquetLeaf&) = default;
};

// Symbolic local zeta integral attached to one fixed point: carries the
// shuffle sigma (one-line, 0-based), the subset I it came from, the place-set
// tag, and (in the equal-rank case) the Schwartz-function tag.
struct LocalZetaLeaf {
  std::vector<int> sigma;
  std::vector<int> subset;
  std::string s_tag;
  std::string phi_tag;  // empty outside the equal-rank case

  friend auto operator<=>(const LocalZetaLeaf&, const LocalZetaLeaf&) = default;
};

struct RationalLeaf {
  Rational value;  // never zero: the zero expression is its own node kind

  friend auto operator<=>(const RationalLeaf&, const RationalLeaf&) = default;
};

using Leaf = std::variant<RationalLeaf, TamagawaLeaf, RankinSelbergLeaf, EpsilonLeaf,
                          JacquetLeaf, LocalZetaLeaf>;

// --- Expression trees -------------------------------------------------------
//
// Immutable expression DAG in a normal form maintained by the factories:
//   * zero is a dedicated node; no RationalLeaf holds 0;
//   * products are flat, never contain zero, fold all rational leaves into a
//     single leading coefficient, and keep factors canonically sorted;
//   * inverse never wraps zero, a rational, another inverse, or a product
//     (it distributes over products and folds on rationals);
//   * sums are flat and drop zero terms, but preserve term order.
class LExpr {
 public:
  enum class Kind { zero, leaf, inverse, product, sum };

  LExpr();  // zero

  static LExpr zero();
  static LExpr one();
  static LExpr constant(const Rational& r);
  static LExpr leaf(Leaf l);
  static LExpr inverse(const LExpr& e);
  static LExpr product(std::vector<LExpr> factors);
  static LExpr sum(std::vector<LExpr> terms);

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::zero; }
  bool is_one() const;

  const Leaf& as_leaf() const;                 // pre: kind() == leaf
  const LExpr& inverse_arg() const;            // pre: kind() == inverse
  const std::vector<LExpr>& children() const;  // pre: product or sum

  std::size_t node_count() const;

  friend bool operator==(const LExpr& a, const LExpr& b);
  static std::strong_ordering compare(const LExpr& a, const LExpr& b);

 private:
  struct Node;
  explicit LExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Multiplicative cancellation: inside every product, numerator and
// denominator leaves cancel exactly, and a partial_s/local_s pair of
// Rankin-Selberg leaves at the same point recombines into a complete one
// (on either side of the fraction bar).  Recurses through sums and inverses.
// Idempotent.
LExpr cancel(const LExpr& e);

// Order of the pole at s = 1 (negative = zero of that order).  Counted from
// leaf data: a complete or partial_s Rankin-Selberg leaf sitting at s = 1
// contributes +1 exactly when its two slots are contragredient to each other
// (equal canonical labels across the duality); a local_s leaf is a finite
// product of local factors, holomorphic and nonvanishing at s = 1, so it
// contributes 0, as do epsilon/constant/zeta/functional leaves.  Inverse
// negates, products add, sums take the max over terms (an upper bound).  The
// zero expression reports 0 by convention.
int pole_order_at_one(const LExpr& e);

// --- Datum-level constructors ----------------------------------------------

// The normalizing L-value of the datum: product over block pairs i < j of
// L(1, pi_i x pi_j^dual) in the requested completion.  Empty product (k = 1)
// is 1.
LExpr l_hat_n_minus(const CuspidalDatum& datum, Completion comp);

enum class NBetaForm {
  epsilon_free,   // L(1-s, pi_i^dual x pi_j) / L(1+s, pi_i x pi_j^dual)
  with_epsilon,   // L(s, pi_i x pi_j^dual) / (eps(s, pi_i x pi_j^dual) L(1+s, pi_i x pi_j^dual))
};

// Rank-one normalization factor attached to the root separating blocks
// i < j, evaluated at the exact point s.  Both forms are equal via the
// functional equation; the epsilon-free one is the default used downstream.
LExpr n_beta(const CuspidalDatum& datum, int i, int j, const Rational& s,
             NBetaForm form = NBetaForm::epsilon_free);

// Normalization factor of the intertwining operator attached to a block
// permutation, at the central point: the product of n_beta over the source
// root pairs the permutation inverts, in cancelled form.  Satisfies the
// telescoping identity
//   cancel(n_w(datum, bp) * l_hat(datum)) == l_hat(datum permuted by sigma).
LExpr n_w(const CuspidalDatum& datum, const BlockPermutation& bp);

// --- Serialization ----------------------------------------------------------

// Canonical JSON text (compact).  The zero expression serializes as the bare
// literal 0.  expr_from_json_text(expr_to_json_text(e)) == e.
std::string expr_to_json_text(const LExpr& e);
LExpr expr_from_json_text(const std::string& text);

std::string expr_to_latex(const LExpr& e);

}  // namespace lperiod

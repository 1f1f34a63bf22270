#pragma once

#include <string>
#include <vector>

#include "lperiod/cuspidal_datum.hpp"
#include "lperiod/fixed_points.hpp"
#include "lperiod/lexpr.hpp"

namespace lperiod {

// Why an assembled right-hand side collapsed to zero.
//   label_collision: two blocks carry equal labels, so the unfolded Whittaker
//                    coefficient degenerates and every term vanishes;
//   empty_fix:       no subset of block sizes sums to n, the fixed-point set
//                    is empty and the sum has no terms.
enum class VanishingReason { none, label_collision, empty_fix };

std::string to_string(VanishingReason r);

struct PeriodTerm {
  FixedPoint fp;
  LExpr expr;
};

// The assembled right-hand side of the period identity for one cuspidal
// datum: a global prefactor (inverse Tamagawa-type constant and inverse
// completed normalizing L-value) times the sum over fixed points of
//   [partial tangent L-factors] * [local Levi L-factors] * [local zeta leaf].
// `expr` is the whole thing; `terms` the per-fixed-point summands (empty when
// the formula vanishes identically).
struct PeriodFormula {
  CuspidalDatum datum;
  VanishingReason reason = VanishingReason::none;
  LExpr expr;
  std::vector<PeriodTerm> terms;
  bool equal_rank = false;
  std::string s_tag;
  std::string phi_tag;  // only set in the equal-rank case
};

// General assembly (any m >= 0).  Label collisions anywhere in the datum, or
// an empty fixed-point set, produce the zero formula with the corresponding
// reason (label_collision takes precedence when both apply).
PeriodFormula assemble_period(const CuspidalDatum& datum, const std::string& s_tag = "S");

// Equal-rank variant (m must be 0): same assembly with the Schwartz-function
// tag threaded into each local zeta leaf.
PeriodFormula assemble_equal_rank(const CuspidalDatum& datum, const std::string& s_tag = "S",
                                  const std::string& phi_tag = "Phi");

// The Whittaker-coefficient normalization of the datum: the inverse completed
// normalizing L-value times the symbolic Jacquet functional.  When the
// L-value has a pole at 1 (some pair of blocks shares a label) the relation
// degenerates and the zero expression is returned.
LExpr whittaker_normalization(const CuspidalDatum& datum, const std::string& s_tag = "S");

enum class EmitFormat { latex, json };

EmitFormat emit_format_from_string(const std::string& s);

// Render the formula's expression.  json round-trips through
// expr_from_json_text; the zero formula renders as "0" in both formats.
std::string emit(const PeriodFormula& formula, EmitFormat format);
std::string emit(const LExpr& e, EmitFormat format);

}  // namespace lperiod

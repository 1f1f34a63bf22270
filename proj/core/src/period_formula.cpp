#include "lperiod/period_formula.hpp"

#include <utility>

#include "lperiod/errors.hpp"

namespace lperiod {

std::string to_string(VanishingReason r) {
  switch (r) {
    case VanishingReason::none: return "none";
    case VanishingReason::label_collision: return "label-collision";
    case VanishingReason::empty_fix: return "empty-fix";
  }
  return "none";
}

namespace {

bool has_label_collision(const CuspidalDatum& datum) {
  for (int i = 0; i < datum.k(); ++i)
    for (int j = i + 1; j < datum.k(); ++j)
      if (datum.label(i) == datum.label(j)) return true;
  return false;
}

LExpr term_for_fixed_point(const CuspidalDatum& datum, const FixedPoint& fp,
                           const std::string& s_tag, const std::string& phi_tag) {
  std::vector<LExpr> factors;

  // Partial tangent-space L-factors: one pair of orientations per (i, j) in
  // I x I^c, at the edge point.
  for (const TangentFactor& tf : tangent_l_data(datum, fp)) {
    RepRef a = tf.orient == Orientation::dual_left ? datum.rep_dual(tf.i) : datum.rep(tf.i);
    RepRef b = tf.orient == Orientation::dual_left ? datum.rep(tf.j) : datum.rep_dual(tf.j);
    factors.push_back(
        LExpr::leaf(RankinSelbergLeaf(std::move(a), std::move(b), Rational(1), Completion::partial_s)));
  }

  // Local normalizing L-value of the permuted datum on the S-places.
  for (int p = 0; p < datum.k(); ++p)
    for (int q = p + 1; q < datum.k(); ++q) {
      int i = fp.sigma[static_cast<size_t>(p)];
      int j = fp.sigma[static_cast<size_t>(q)];
      factors.push_back(LExpr::leaf(
          RankinSelbergLeaf(datum.rep(i), datum.rep_dual(j), Rational(1), Completion::local_s)));
    }

  // Symbolic local zeta integral carrying the shuffle.
  factors.push_back(LExpr::leaf(LocalZetaLeaf{fp.sigma, fp.subset, s_tag, phi_tag}));

  return LExpr::product(std::move(factors));
}

PeriodFormula assemble(const CuspidalDatum& datum, const std::string& s_tag,
                       const std::string& phi_tag, bool equal_rank) {
  PeriodFormula out{datum, VanishingReason::none, LExpr::zero(), {}, equal_rank, s_tag, phi_tag};

  if (has_label_collision(datum)) {
    out.reason = VanishingReason::label_collision;
    out.expr = LExpr::zero();
    return out;
  }

  std::vector<FixedPoint> fix = enumerate_fix(datum);
  if (fix.empty()) {
    out.reason = VanishingReason::empty_fix;
    out.expr = LExpr::zero();
    return out;
  }

  std::vector<LExpr> terms;
  terms.reserve(fix.size());
  for (const FixedPoint& fp : fix) {
    LExpr term = term_for_fixed_point(datum, fp, s_tag, phi_tag);
    out.terms.push_back(PeriodTerm{fp, term});
    terms.push_back(std::move(term));
  }

  std::vector<LExpr> factors;
  factors.push_back(LExpr::inverse(LExpr::leaf(TamagawaLeaf{"Delta_H", s_tag})));
  factors.push_back(LExpr::inverse(l_hat_n_minus(datum, Completion::complete)));
  factors.push_back(LExpr::sum(std::move(terms)));
  out.expr = LExpr::product(std::move(factors));
  return out;
}

}  // namespace

PeriodFormula assemble_period(const CuspidalDatum& datum, const std::string& s_tag) {
  return assemble(datum, s_tag, "", false);
}

PeriodFormula assemble_equal_rank(const CuspidalDatum& datum, const std::string& s_tag,
                                  const std::string& phi_tag) {
  if (datum.m() != 0)
    throw DomainError("precondition", "equal-rank assembly needs m = 0, got m = " +
                                          std::to_string(datum.m()));
  if (phi_tag.empty())
    throw DomainError("precondition", "equal-rank assembly needs a nonempty Schwartz tag");
  return assemble(datum, s_tag, phi_tag, true);
}

LExpr whittaker_normalization(const CuspidalDatum& datum, const std::string& s_tag) {
  // A pole of the completed normalizing L-value at the edge (equal labels on
  // two blocks) degenerates the Whittaker coefficient: the relation reads 0.
  if (has_label_collision(datum)) return LExpr::zero();
  return LExpr::product({LExpr::inverse(l_hat_n_minus(datum, Completion::complete)),
                         LExpr::leaf(JacquetLeaf{s_tag})});
}

EmitFormat emit_format_from_string(const std::string& s) {
  if (s == "latex") return EmitFormat::latex;
  if (s == "json") return EmitFormat::json;
  throw DomainError("schema", "unknown emit format '" + s + "'", "format");
}

std::string emit(const LExpr& e, EmitFormat format) {
  return format == EmitFormat::latex ? expr_to_latex(e) : expr_to_json_text(e);
}

std::string emit(const PeriodFormula& formula, EmitFormat format) {
  return emit(formula.expr, format);
}

}  // namespace lperiod

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <variant>

#include "lperiod/errors.hpp"
#include "lperiod/period_formula.hpp"
#include "support/test_util.hpp"

using namespace lperiod;
using testsupport::make_datum;

namespace {

// All local-zeta leaves of a term.
std::vector<LocalZetaLeaf> zeta_leaves(const LExpr& term) {
  std::vector<LocalZetaLeaf> out;
  auto consider = [&](const LExpr& e) {
    if (e.kind() != LExpr::Kind::leaf) return;
    if (const auto* z = std::get_if<LocalZetaLeaf>(&e.as_leaf())) out.push_back(*z);
  };
  if (term.kind() == LExpr::Kind::product)
    for (const LExpr& f : term.children()) consider(f);
  else
    consider(term);
  return out;
}

}  // namespace

TEST_CASE("one-term assembly") {
  auto d = make_datum({2, 3}, {"a", "b"}, 2, 1);
  PeriodFormula f = assemble_period(d);

  CHECK(f.reason == VanishingReason::none);
  CHECK_FALSE(f.equal_rank);
  CHECK(f.s_tag == "S");
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms[0].fp.subset == std::vector<int>{0});

  // Two partial tangent factors, one local Levi factor, one zeta integral,
  // and the two inverted prefactors, flattened into a single product.
  REQUIRE(f.expr.kind() == LExpr::Kind::product);
  CHECK(f.expr.children().size() == 6);
  CHECK(testsupport::rs_leaves(f.expr, Completion::partial_s).size() == 2);
  CHECK(testsupport::rs_leaves(f.expr, Completion::local_s).size() == 1);

  CHECK(pole_order_at_one(f.expr) == 0);

  auto zetas = zeta_leaves(f.terms[0].expr);
  REQUIRE(zetas.size() == 1);
  CHECK(zetas[0].sigma == std::vector<int>{0, 1});
  CHECK(zetas[0].subset == std::vector<int>{0});
  CHECK(zetas[0].s_tag == "S");
  CHECK(zetas[0].phi_tag.empty());
}

TEST_CASE("golden latex") {
  auto d = make_datum({2, 3}, {"a", "b"}, 2, 1);
  PeriodFormula f = assemble_period(d);
  CHECK(emit(f, EmitFormat::latex) ==
        R"(L^{S}(1, \pi_{a} \times \pi_{b}) \, L^{S}(1, \pi_{a} \times \pi_{b}) \, )"
        R"(L_{S}(1, \pi_{a} \times \pi_{b}) \, Z_{S}\left(0,\, )"
        R"(\Omega^{M_{Q_n}}_{S}\left(N_{\pi,S}(\sigma_{\{1\}})\, W^{M_P}_{\varphi,S}\right)\right) \, )"
        R"({\Delta_{H}^{S,*}}^{-1} \, {L(1, \pi_{a} \times \pi_{b})}^{-1})");
}

TEST_CASE("json emission round-trips") {
  auto d = make_datum({1, 1, 1, 1}, {"a", "b", "c", "e"}, 2, 0);
  PeriodFormula f = assemble_period(d);
  CHECK(f.terms.size() == 6);
  CHECK(expr_from_json_text(emit(f, EmitFormat::json)) == f.expr);
}

TEST_CASE("vanishing by label collision") {
  auto d = make_datum({2, 2, 1}, {"a", "a", "b"}, 2, 1);
  PeriodFormula f = assemble_period(d);
  CHECK(f.reason == VanishingReason::label_collision);
  CHECK(f.expr.is_zero());
  CHECK(f.terms.empty());
  CHECK(emit(f, EmitFormat::json) == "0");
  CHECK(emit(f, EmitFormat::latex) == "0");
  CHECK(to_string(f.reason) == "label-collision");
}

TEST_CASE("vanishing by empty fixed-point set") {
  auto d = make_datum({3, 3}, {"a", "b"}, 2, 2);
  PeriodFormula f = assemble_period(d);
  CHECK(f.reason == VanishingReason::empty_fix);
  CHECK(f.expr.is_zero());

  // Collision takes precedence when both degeneracies apply.
  auto both = make_datum({3, 3}, {"a", "a"}, 2, 2);
  CHECK(assemble_period(both).reason == VanishingReason::label_collision);
}

TEST_CASE("custom place-set tag") {
  auto d = make_datum({2, 3}, {"a", "b"}, 2, 1);
  PeriodFormula f = assemble_period(d, "T");
  auto zetas = zeta_leaves(f.terms[0].expr);
  REQUIRE(zetas.size() == 1);
  CHECK(zetas[0].s_tag == "T");
  CHECK(emit(f, EmitFormat::latex).find("\\Delta_{H}^{T,*}") != std::string::npos);
}

TEST_CASE("equal-rank assembly") {
  auto d = make_datum({1, 1}, {"a", "b"}, 1, 0);
  PeriodFormula f = assemble_equal_rank(d);
  CHECK(f.equal_rank);
  CHECK(f.phi_tag == "Phi");
  REQUIRE(f.terms.size() == 2);
  for (const PeriodTerm& t : f.terms) {
    auto zetas = zeta_leaves(t.expr);
    REQUIRE(zetas.size() == 1);
    CHECK(zetas[0].phi_tag == "Phi");
  }
  CHECK(f.terms[0].fp.subset == std::vector<int>{0});
  CHECK(f.terms[1].fp.subset == std::vector<int>{1});
  CHECK(emit(f, EmitFormat::latex).find("\\Phi_{S}") != std::string::npos);

  CHECK_THROWS_AS(assemble_equal_rank(make_datum({2, 3}, {"a", "b"}, 2, 1)), DomainError);
  CHECK_THROWS_AS(assemble_equal_rank(d, "S", ""), DomainError);
}

TEST_CASE("whittaker normalization") {
  auto d = make_datum({2, 3}, {"a", "b"}, 2, 1);
  LExpr w = whittaker_normalization(d);
  REQUIRE(w.kind() == LExpr::Kind::product);
  REQUIRE(w.children().size() == 2);
  CHECK(std::holds_alternative<JacquetLeaf>(w.children()[0].as_leaf()));
  CHECK(w.children()[1].kind() == LExpr::Kind::inverse);
  CHECK(pole_order_at_one(w) == 0);

  CHECK(whittaker_normalization(make_datum({2, 2}, {"a", "a"}, 2, 0)).is_zero());

  LExpr wt = whittaker_normalization(d, "T");
  CHECK(expr_to_latex(wt).find("\\Omega_{T}") != std::string::npos);
}

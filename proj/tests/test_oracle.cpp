#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lperiod/errors.hpp"
#include "lperiod/fq_matrix.hpp"
#include "lperiod/grassmannian_oracle.hpp"
#include "lperiod/json_io.hpp"

using namespace lperiod;

namespace {

RepSpec cyclic_spec(int r, const std::vector<std::pair<std::string, int>>& chars, int n) {
  RepSpec spec;
  spec.kind = GroupKind::cyclic;
  spec.r1 = r;
  for (const auto& [tag, c] : chars) spec.blocks.push_back(BlockSpec{tag, 1, {c}});
  spec.n = n;
  return spec;
}

}  // namespace

TEST_CASE("prime field helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(fq_inv(3, 7) == 5);
  CHECK(fq_inv(1, 2) == 1);
}

TEST_CASE("matrix echelon and nullspace") {
  FqMatrix a(5, 2, 2);
  a.set(0, 0, 2);
  a.set(0, 1, 4);
  a.set(1, 0, 1);
  a.set(1, 1, 3);
  CHECK(a.rank() == 2);
  FqMatrix r = a;
  r.rref_in_place();
  CHECK(r == FqMatrix::identity(5, 2));

  FqMatrix b(3, 1, 2);
  b.set(0, 0, 1);
  b.set(0, 1, 2);
  FqMatrix ns = b.nullspace();
  REQUIRE(ns.rows() == 1);
  // Every nullspace row is killed by b.
  for (int i = 0; i < ns.rows(); ++i) {
    int acc = 0;
    for (int c = 0; c < 2; ++c) acc += b.at(0, c) * ns.at(i, c);
    CHECK(acc % 3 == 0);
  }

  CHECK(b.row_space_contains({2, 4}));
  CHECK_FALSE(b.row_space_contains({1, 0}));
  CHECK(b.row_space_contains({0, 0}));
}

TEST_CASE("matrix power") {
  FqMatrix m(7, 2, 2);  // companion of x^2 - x - 1 mod 7
  m.set(0, 1, 1);
  m.set(1, 0, 1);
  m.set(1, 1, 1);
  FqMatrix id = FqMatrix::identity(7, 2);
  CHECK(m.pow(0) == id);
  CHECK(m.pow(1) == m);
  CHECK(m.pow(2) == m.mul(m));
  CHECK(m.pow(16).mul(m.pow(16)) == m.pow(32));
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(5, 2, 3) == 1210);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(3, 0, 5) == 1);
  CHECK(gaussian_binomial(3, 3, 7) == 1);
  CHECK(gaussian_binomial(5, 2, 3) == gaussian_binomial(5, 3, 3));
  CHECK(gaussian_binomial(4, 1, 5) == 156);  // 1 + 5 + 25 + 125
}

TEST_CASE("rep spec validation") {
  CHECK_THROWS_AS(FqMatrixRep::materialize(cyclic_spec(2, {}, 0), 3), DomainError);
  {
    auto s = cyclic_spec(2, {{"x", 1}}, 0);
    s.blocks[0].dim = 3;
    CHECK_THROWS_AS(FqMatrixRep::materialize(s, 3), DomainError);
  }
  {
    // Same tag, different character.
    auto s = cyclic_spec(3, {{"x", 1}, {"x", 2}}, 1);
    CHECK_THROWS_AS(FqMatrixRep::materialize(s, 7), DomainError);
  }
  {
    // n out of range.
    auto s = cyclic_spec(2, {{"x", 1}}, 5);
    CHECK_THROWS_AS(FqMatrixRep::materialize(s, 3), DomainError);
  }
}

TEST_CASE("materialization admissibility") {
  auto s = cyclic_spec(2, {{"e", 0}, {"x", 1}}, 1);
  // q must be an odd prime here: 2 divides the group order, 9 is composite.
  CHECK_THROWS_AS(FqMatrixRep::materialize(s, 2), DomainError);
  CHECK_THROWS_AS(FqMatrixRep::materialize(s, 9), DomainError);

  // Character of order 3 needs 3 | q - 1.
  auto t = cyclic_spec(3, {{"x", 1}}, 0);
  CHECK_THROWS_AS(FqMatrixRep::materialize(t, 5), DomainError);
  CHECK(FqMatrixRep::materialize(t, 7).q() == 7);

  // Error code is stable.
  try {
    FqMatrixRep::materialize(t, 5);
    FAIL("expected inadmissible_q");
  } catch (const DomainError& e) {
    CHECK(e.code() == "inadmissible_q");
  }

  // Distinct tags naming isomorphic representations are rejected.
  auto u = cyclic_spec(2, {{"x", 1}, {"y", 1}}, 1);
  CHECK_THROWS_AS(FqMatrixRep::materialize(u, 3), DomainError);
}

TEST_CASE("materialized generators satisfy the relations") {
  auto s = cyclic_spec(4, {{"e", 0}, {"x", 1}, {"y", 2}}, 1);
  FqMatrixRep rep = FqMatrixRep::materialize(s, 5);
  REQUIRE(rep.generators().size() == 1);
  const FqMatrix& g = rep.generators()[0];
  CHECK(g.pow(4) == FqMatrix::identity(5, 3));
  CHECK(g.pow(2) != FqMatrix::identity(5, 3));
  CHECK(rep.dimension() == 3);
  CHECK(rep.block_begin(1) == 1);
}

TEST_CASE("irreducible plane blocks") {
  // Z/3 acting irreducibly on a plane over F_5 (3 | 24, 3 does not divide 4).
  RepSpec s;
  s.kind = GroupKind::cyclic;
  s.r1 = 3;
  s.blocks.push_back(BlockSpec{"rho", 2, {1}});
  s.blocks.push_back(BlockSpec{"e", 1, {0}});
  s.n = 1;
  FqMatrixRep rep = FqMatrixRep::materialize(s, 5);
  CHECK(rep.generators()[0].pow(3) == FqMatrix::identity(5, 3));

  // Only the trivial line is invariant; the plane is irreducible.
  auto splittings = enumerate_splittings(rep, 1);
  REQUIRE(splittings.size() == 1);
  CHECK(verify_splitting(rep, 1, splittings[0]));
  auto tangent = tangent_dimension(rep, splittings[0]);
  CHECK(tangent.total_dim == 4);  // 2 * 1 * (3 - 1)
  CHECK(tangent.equivariant_dim == 0);

  // Over F_7 the order-3 character splits, so the declared plane is rejected.
  CHECK_THROWS_AS(FqMatrixRep::materialize(s, 7), DomainError);
}

TEST_CASE("isotypic plane has a projective line of invariant subspaces") {
  auto s = cyclic_spec(2, {{"x", 1}, {"x", 1}}, 1);
  for (int q : {3, 5, 7}) {
    FqMatrixRep rep = FqMatrixRep::materialize(s, q);
    auto splittings = enumerate_splittings(rep, 1);
    CHECK(static_cast<int>(splittings.size()) == q + 1);
    for (const auto& sp : splittings) {
      CHECK(verify_splitting(rep, 1, sp));
      // Both lines carry the same character: a 2-dimensional intertwiner space.
      CHECK(tangent_dimension(rep, sp).equivariant_dim == 2);
    }
  }
}

TEST_CASE("distinct characters give exactly the coordinate splittings") {
  auto s = cyclic_spec(2, {{"e", 0}, {"x", 1}}, 1);
  FqMatrixRep rep = FqMatrixRep::materialize(s, 5);
  auto splittings = enumerate_splittings(rep, 1);
  REQUIRE(splittings.size() == 2);
  for (const auto& sp : splittings) {
    CHECK(verify_splitting(rep, 1, sp));
    CHECK(tangent_dimension(rep, sp).equivariant_dim == 0);
  }
}

TEST_CASE("trivial action counts the whole grassmannian") {
  // Five copies of the trivial line (one shared tag): every subspace is
  // invariant, so the count is the full Gaussian binomial.
  auto s = cyclic_spec(1, {{"a", 0}, {"a", 0}, {"a", 0}, {"a", 0}, {"a", 0}}, 2);
  FqMatrixRep rep = FqMatrixRep::materialize(s, 3);
  auto splittings = enumerate_splittings(rep, 2);
  CHECK(splittings.size() == 1210);  // [5 choose 2]_3
  REQUIRE(!splittings.empty());
  CHECK(verify_splitting(rep, 2, splittings.front()));
  CHECK(tangent_dimension(rep, splittings.front()).equivariant_dim == 12);  // everything commutes
}

TEST_CASE("enumeration budget") {
  auto s = cyclic_spec(2, {{"x", 1}, {"x", 1}}, 1);
  FqMatrixRep rep = FqMatrixRep::materialize(s, 7);
  OracleOptions opts;
  opts.enumeration_budget = 4;
  CHECK_THROWS_AS(enumerate_splittings(rep, 1, opts), DomainError);
}

TEST_CASE("finiteness criterion, finite branch") {
  auto s = cyclic_spec(2, {{"e", 0}, {"x", 1}}, 1);
  auto report = check_finiteness_criterion(s, {3, 5, 7});
  CHECK(report.condition_holds);
  CHECK(report.branch == "finite");
  CHECK(report.subset_count == 2);
  REQUIRE(report.runs.size() == 3);
  for (const auto& run : report.runs) CHECK(run.count == 2);
  CHECK(report.pass);
}

TEST_CASE("finiteness criterion, infinite branch") {
  auto s = cyclic_spec(2, {{"x", 1}, {"x", 1}, {"e", 0}}, 1);
  auto report = check_finiteness_criterion(s, {3, 5});
  CHECK_FALSE(report.condition_holds);
  CHECK(report.branch == "infinite");
  CHECK(report.subset_count == 3);
  REQUIRE(report.runs.size() == 2);
  CHECK(report.runs[0].count == 5);  // q + 2
  CHECK(report.runs[1].count == 7);
  CHECK(report.pass);
}

TEST_CASE("finiteness respects the q caps") {
  auto s = cyclic_spec(5, {{"a", 0}, {"x", 1}, {"y", 2}}, 1);
  CHECK_THROWS_AS(check_finiteness_criterion(s, {11}), DomainError);  // default cap 7
  OracleOptions opts;
  opts.q_max = 31;
  auto report = check_finiteness_criterion(s, {11, 31}, opts);
  CHECK(report.branch == "finite");
  CHECK(report.pass);
  REQUIRE(report.runs.size() == 2);
  CHECK(report.runs[0].count == 3);

  opts.q_max = 200;
  CHECK_THROWS_AS(check_finiteness_criterion(s, {101}, opts), DomainError);  // hard ceiling 97
}

TEST_CASE("thread count does not change the enumeration") {
  auto s = cyclic_spec(2, {{"x", 1}, {"x", 1}, {"e", 0}}, 1);
  FqMatrixRep rep = FqMatrixRep::materialize(s, 5);
  OracleOptions serial, parallel;
  parallel.threads = 4;
  auto a = enumerate_splittings(rep, 1, serial);
  auto b = enumerate_splittings(rep, 1, parallel);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].v_basis == b[i].v_basis);
    CHECK(a[i].w_basis == b[i].w_basis);
  }
}

TEST_CASE("rep spec json round-trip") {
  std::string text = R"({
    "schema_version": 1,
    "group": "product:2,2",
    "q": 3,
    "n": 2,
    "blocks": [
      {"tag": "a", "dim": 1, "character": [0, 0]},
      {"tag": "b", "dim": 1, "character": [0, 1]},
      {"tag": "c", "dim": 1, "character": [1, 0]},
      {"tag": "d", "dim": 1, "character": [1, 1]}
    ]
  })";
  RepSpec spec = rep_spec_from_json_text(text);
  CHECK(spec.kind == GroupKind::product);
  CHECK(spec.r1 == 2);
  CHECK(spec.r2 == 2);
  CHECK(spec.default_q == 3);
  CHECK(spec.n == 2);
  REQUIRE(spec.blocks.size() == 4);
  CHECK(spec.blocks[1].character == std::vector<int>{0, 1});
  CHECK(spec.group_order() == 4);
  CHECK(spec.num_generators() == 2);
  CHECK(spec.dimension() == 4);

  RepSpec again = rep_spec_from_json_text(rep_spec_to_json_text(spec));
  CHECK(again.kind == spec.kind);
  CHECK(again.blocks.size() == spec.blocks.size());
  CHECK(again.default_q == spec.default_q);

  CHECK_THROWS_AS(rep_spec_from_json_text("{\"group\":\"dihedral:3\",\"n\":1,\"blocks\":[]}"),
                  DomainError);

  auto report = check_finiteness_criterion(spec, {3, 5, 7});
  CHECK(report.branch == "finite");
  CHECK(report.subset_count == 6);
  CHECK(report.pass);
  std::string doc = finiteness_report_to_json_text(spec, report);
  CHECK(doc.find("\"verdict\":\"PASS\"") != std::string::npos);
  CHECK(doc.find("\"branch\":\"finite\"") != std::string::npos);
}

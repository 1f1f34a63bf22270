// Microbenchmarks for the hot paths: double-coset enumeration, fixed-point
// enumeration, formula assembly, symbolic cancellation, and the finite-field
// subspace sweep.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "lperiod/composition.hpp"
#include "lperiod/cuspidal_datum.hpp"
#include "lperiod/fixed_points.hpp"
#include "lperiod/grassmannian_oracle.hpp"
#include "lperiod/lexpr.hpp"
#include "lperiod/period_formula.hpp"
#include "lperiod/weyl.hpp"

namespace {

using namespace lperiod;

CuspidalDatum ones_datum(int k, int n) {
  std::vector<int> parts(static_cast<size_t>(k), 1);
  std::vector<std::string> labels(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) labels[static_cast<size_t>(i)] = "p" + std::to_string(i);
  return CuspidalDatum(Composition(std::move(parts)), std::move(labels), {}, n, k - 2 * n);
}

void BM_EnumerateMinReps_FullFlag7(benchmark::State& state) {
  Composition P({1, 1, 1, 1, 1, 1, 1});
  for (auto _ : state) {
    auto reps = enumerate_min_reps(P, P);  // all 5040 of S_7
    benchmark::DoNotOptimize(reps);
  }
}
BENCHMARK(BM_EnumerateMinReps_FullFlag7);

void BM_EnumerateMinReps_Mixed8(benchmark::State& state) {
  Composition P({2, 2, 2, 2}), Q({1, 2, 2, 3});
  for (auto _ : state) {
    auto reps = enumerate_min_reps(P, Q);
    benchmark::DoNotOptimize(reps);
  }
}
BENCHMARK(BM_EnumerateMinReps_Mixed8);

void BM_EnumerateFix_16Blocks(benchmark::State& state) {
  CuspidalDatum datum = ones_datum(16, 8);  // 12870 fixed points
  for (auto _ : state) {
    auto fps = enumerate_fix(datum);
    benchmark::DoNotOptimize(fps);
  }
}
BENCHMARK(BM_EnumerateFix_16Blocks);

void BM_AssemblePeriod_8Blocks(benchmark::State& state) {
  CuspidalDatum datum = ones_datum(8, 4);  // 70 terms
  for (auto _ : state) {
    PeriodFormula f = assemble_period(datum);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_AssemblePeriod_8Blocks);

void BM_CancelTelescoping(benchmark::State& state) {
  CuspidalDatum datum = ones_datum(8, 4);
  std::vector<int> reversal = {7, 6, 5, 4, 3, 2, 1, 0};
  BlockPermutation bp = block_permutation_from_sigma(datum.composition(), reversal);
  LExpr nw = n_w(datum, bp);  // 28 inverted roots
  LExpr lhat = l_hat_n_minus(datum, Completion::complete);
  for (auto _ : state) {
    LExpr out = cancel(LExpr::product({nw, lhat}));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_CancelTelescoping);

void BM_InvariantSplittings(benchmark::State& state) {
  // x + x + x + e + e + e over F_q, n = 3: the enumerator walks every
  // 3-dimensional subspace, [6 choose 3]_q of them.
  RepSpec spec;
  spec.kind = GroupKind::cyclic;
  spec.r1 = 2;
  spec.blocks = {{"x", 1, {1}}, {"x", 1, {1}}, {"x", 1, {1}},
                 {"e", 1, {0}}, {"e", 1, {0}}, {"e", 1, {0}}};
  spec.n = 3;
  const int q = static_cast<int>(state.range(0));
  FqMatrixRep rep = FqMatrixRep::materialize(spec, q);
  for (auto _ : state) {
    auto sps = enumerate_splittings(rep, spec.n);
    benchmark::DoNotOptimize(sps);
  }
  state.SetLabel("[6 choose 3]_" + std::to_string(q) + " = " +
                 std::to_string(gaussian_binomial(6, 3, q)) + " candidates");
}
BENCHMARK(BM_InvariantSplittings)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();

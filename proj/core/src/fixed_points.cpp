#include "lperiod/fixed_points.hpp"

#include <algorithm>
#include <sstream>

#include "lperiod/errors.hpp"

namespace lperiod {

Composition symmetric_subgroup_composition(const CuspidalDatum& datum) {
  return Composition::dropping_zeros({datum.n(), datum.n() + datum.m()});
}

namespace {

FixedPoint fixed_point_from_subset(const CuspidalDatum& datum, const std::vector<int>& I) {
  const int k = datum.k();
  std::vector<bool> in(static_cast<size_t>(k), false);
  for (int b : I) in[static_cast<size_t>(b)] = true;
  std::vector<int> sigma;
  sigma.reserve(static_cast<size_t>(k));
  for (int b = 0; b < k; ++b)
    if (in[static_cast<size_t>(b)]) sigma.push_back(b);
  const int t = static_cast<int>(sigma.size());
  for (int b = 0; b < k; ++b)
    if (!in[static_cast<size_t>(b)]) sigma.push_back(b);
  BlockPermutation bp = block_permutation_from_sigma(datum.composition(), sigma);
  return FixedPoint{I, t, std::move(sigma), std::move(bp)};
}

}  // namespace

std::vector<FixedPoint> enumerate_fix(const CuspidalDatum& datum) {
  const int k = datum.k();
  const Composition& comp = datum.composition();
  std::vector<FixedPoint> out;
  std::vector<int> subset;
  // Depth-first inclusion gives subsets in lexicographic order; parts are
  // positive, so a branch is dead as soon as the partial sum passes n.
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (sum == datum.n()) {
      out.push_back(fixed_point_from_subset(datum, subset));
      return;
    }
    if (i == k || sum > datum.n()) return;
    subset.push_back(i);
    self(self, i + 1, sum + comp.part(i));
    subset.pop_back();
    self(self, i + 1, sum);
  };
  rec(rec, 0, 0);
  return out;
}

MatchReport fix_matches_weyl(const CuspidalDatum& datum) {
  std::vector<FixedPoint> fix = enumerate_fix(datum);
  Composition Qn = symmetric_subgroup_composition(datum);
  std::vector<WeylElement> reps = w_p_semicolon_q(datum.composition(), Qn);

  auto fail = [](const std::string& what) { return MatchReport{false, what}; };

  if (fix.size() != reps.size()) {
    std::ostringstream os;
    os << "count mismatch: " << fix.size() << " fixed points vs " << reps.size()
       << " representatives";
    return fail(os.str());
  }

  std::vector<std::vector<int>> rep_perms;
  rep_perms.reserve(reps.size());
  for (const auto& w : reps) rep_perms.push_back(w.perm);
  std::sort(rep_perms.begin(), rep_perms.end());

  for (const auto& fp : fix) {
    const WeylElement& w = fp.bp.underlying;
    if (!std::binary_search(rep_perms.begin(), rep_perms.end(), w.perm)) {
      std::ostringstream os;
      os << "fixed point I={";
      for (size_t i = 0; i < fp.subset.size(); ++i) os << (i ? "," : "") << fp.subset[i] + 1;
      os << "}: underlying permutation missing from w_p_semicolon_q";
      return fail(os.str());
    }
    // The representative must conjugate the Levi onto the permuted one: block
    // images, read off in target order, must reproduce P_sigma.
    if (w.target.parts() != datum.composition().permuted(fp.sigma).parts()) {
      std::ostringstream os;
      os << "fixed point I={";
      for (size_t i = 0; i < fp.subset.size(); ++i) os << (i ? "," : "") << fp.subset[i] + 1;
      os << "}: target composition is not the sigma-permuted source";
      return fail(os.str());
    }
  }

  // The underlying permutations must exhaust the representative set.
  std::vector<std::vector<int>> fix_perms;
  fix_perms.reserve(fix.size());
  for (const auto& fp : fix) fix_perms.push_back(fp.bp.underlying.perm);
  std::sort(fix_perms.begin(), fix_perms.end());
  if (fix_perms != rep_perms) return fail("permutation sets differ");

  return MatchReport{};
}

std::vector<TangentFactor> tangent_l_data(const CuspidalDatum& datum, const FixedPoint& fp) {
  const int k = datum.k();
  std::vector<bool> in(static_cast<size_t>(k), false);
  for (int b : fp.subset) {
    if (b < 0 || b >= k)
      throw DomainError("precondition", "fixed point does not belong to this datum");
    in[static_cast<size_t>(b)] = true;
  }
  std::vector<TangentFactor> out;
  out.reserve(2 * fp.subset.size() * (static_cast<size_t>(k) - fp.subset.size()));
  for (int i : fp.subset)
    for (int j = 0; j < k; ++j) {
      if (in[static_cast<size_t>(j)]) continue;
      out.push_back(TangentFactor{i, j, Orientation::dual_left});
      out.push_back(TangentFactor{i, j, Orientation::dual_right});
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_pole_at_one(const CuspidalDatum& datum, const FixedPoint& fp) {
  const int k = datum.k();
  std::vector<bool> in(static_cast<size_t>(k), false);
  for (int b : fp.subset) in[static_cast<size_t>(b)] = true;
  for (int i : fp.subset)
    for (int j = 0; j < k; ++j)
      if (!in[static_cast<size_t>(j)] && datum.label(i) == datum.label(j)) return true;
  return false;
}

}  // namespace lperiod

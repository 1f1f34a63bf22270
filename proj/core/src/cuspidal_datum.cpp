#include "lperiod/cuspidal_datum.hpp"

#include <algorithm>
#include <map>

#include "lperiod/errors.hpp"

namespace lperiod {

CuspidalDatum::CuspidalDatum(Composition parts, std::vector<std::string> labels,
                             const std::map<std::string, std::string>& dual, int n, int m)
    : comp_(std::move(parts)), labels_(std::move(labels)), n_(n), m_(m) {
  if (comp_.size() > kMaxBlocks)
    throw DomainError("caps", "more than " + std::to_string(kMaxBlocks) + " blocks", "parts");
  if (static_cast<int>(labels_.size()) != comp_.size())
    throw DomainError("labels", "need exactly one label per part", "labels");
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i].empty())
      throw DomainError("labels", "empty label", "labels[" + std::to_string(i) + "]");
  if (n_ < 0) throw DomainError("split", "n must be nonnegative", "n");
  if (m_ < 0) throw DomainError("split", "m must be nonnegative", "m");
  if (2 * n_ + m_ != comp_.total())
    throw DomainError("split",
                      "2n + m = " + std::to_string(2 * n_ + m_) +
                          " does not match the composition total " + std::to_string(comp_.total()),
                      "n");

  // Close the duality map into an involution over all ids in sight; labels
  // not mentioned are self-dual.
  for (const auto& [a, b] : dual) {
    if (a.empty() || b.empty()) throw DomainError("dual", "empty id in dual map", "dual");
    auto it = dual_.find(a);
    if (it != dual_.end() && it->second != b)
      throw DomainError("dual", "conflicting images for '" + a + "'", "dual." + a);
    dual_[a] = b;
    auto rit = dual_.find(b);
    if (rit != dual_.end() && rit->second != a)
      throw DomainError("dual", "dual map is not an involution at '" + b + "'", "dual." + b);
    dual_[b] = a;
  }
  for (const auto& l : labels_)
    if (!dual_.count(l)) dual_[l] = l;

  // One cuspidal representation has one rank: a label (or its dual) reused on
  // blocks of different sizes is inconsistent.
  std::map<std::string, int> rank_of;
  for (int i = 0; i < comp_.size(); ++i) {
    const std::string& l = labels_[static_cast<size_t>(i)];
    auto [it, fresh] = rank_of.emplace(l, comp_.part(i));
    if (!fresh && it->second != comp_.part(i))
      throw DomainError("labels", "label '" + l + "' reused with a different block size",
                        "labels[" + std::to_string(i) + "]");
  }
  for (const auto& [l, r] : rank_of) {
    auto it = rank_of.find(dual_.at(l));
    if (it != rank_of.end() && it->second != r)
      throw DomainError("dual", "label '" + l + "' and its dual have different block sizes",
                        "dual." + l);
  }
}

const std::string& CuspidalDatum::dual_of(const std::string& id) const {
  auto it = dual_.find(id);
  return it != dual_.end() ? it->second : id;
}

RepRef CuspidalDatum::rep(int i) const {
  const std::string& l = labels_[static_cast<size_t>(i)];
  return RepRef{l, dual_of(l), comp_.part(i)};
}

RepRef CuspidalDatum::rep_dual(int i) const {
  const std::string& l = labels_[static_cast<size_t>(i)];
  return RepRef{dual_of(l), l, comp_.part(i)};
}

CuspidalDatum CuspidalDatum::permuted(const std::vector<int>& sigma) const {
  Composition comp = comp_.permuted(sigma);
  std::vector<std::string> labels(labels_.size());
  for (size_t p = 0; p < sigma.size(); ++p)
    labels[p] = labels_[static_cast<size_t>(sigma[p])];
  return CuspidalDatum(std::move(comp), std::move(labels), dual_, n_, m_);
}

CuspidalDatum CuspidalDatum::dualized() const {
  std::vector<std::string> labels(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) labels[i] = dual_.at(labels_[i]);
  return CuspidalDatum(comp_, std::move(labels), dual_, n_, m_);
}

namespace {

// Visit every subset of blocks whose sizes sum to n; f returns true to stop.
template <typename F>
void for_each_balanced_subset(const Composition& comp, int n, F&& f) {
  const int k = comp.size();
  std::vector<int> subset;
  auto rec = [&](auto&& self, int i, int sum) -> bool {
    if (sum == n) {
      // Parts are positive, so no proper extension can sum to n again.
      return f(subset);
    }
    if (i == k || sum > n) return false;
    subset.push_back(i);
    if (self(self, i + 1, sum + comp.part(i))) return true;
    subset.pop_back();
    return self(self, i + 1, sum);
  };
  rec(rec, 0, 0);
}

}  // namespace

std::optional<RegularityViolation> first_regularity_violation(const CuspidalDatum& datum) {
  std::optional<RegularityViolation> found;
  const int k = datum.k();
  for_each_balanced_subset(datum.composition(), datum.n(), [&](const std::vector<int>& I) {
    std::vector<bool> in(static_cast<size_t>(k), false);
    for (int b : I) in[static_cast<size_t>(b)] = true;
    for (int i : I)
      for (int j = 0; j < k; ++j) {
        if (in[static_cast<size_t>(j)]) continue;
        if (datum.label(i) == datum.label(j)) {
          found = RegularityViolation{I, i, j};
          return true;
        }
      }
    return false;
  });
  return found;
}

bool check_regularity(const CuspidalDatum& datum) {
  return !first_regularity_violation(datum).has_value();
}

bool is_even(const CuspidalDatum& datum) {
  std::map<std::pair<int, std::string>, int> mult;
  for (int i = 0; i < datum.k(); ++i)
    ++mult[{datum.composition().part(i), datum.label(i)}];
  for (const auto& [key, count] : mult)
    if (count % 2 != 0) return false;
  return true;
}

}  // namespace lperiod

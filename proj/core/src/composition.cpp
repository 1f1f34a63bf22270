#include "lperiod/composition.hpp"

#include <algorithm>

#include "lperiod/errors.hpp"

namespace lperiod {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw DomainError("parts", "composition needs at least one part", "parts");
  offsets_.reserve(parts_.size());
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw DomainError("parts", "composition parts must be positive",
                        "parts[" + std::to_string(i) + "]");
    offsets_.push_back(total_);
    total_ += parts_[i];
  }
}

Composition Composition::dropping_zeros(const std::vector<int>& parts) {
  std::vector<int> kept;
  kept.reserve(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw DomainError("parts", "composition parts must be nonnegative",
                        "parts[" + std::to_string(i) + "]");
    if (parts[i] > 0) kept.push_back(parts[i]);
  }
  return Composition(std::move(kept));
}

int Composition::block_of(int p) const {
  for (int i = size() - 1; i >= 0; --i)
    if (p >= block_begin(i)) return i;
  return 0;
}

Composition Composition::permuted(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != size())
    throw DomainError("precondition", "block permutation has wrong length");
  std::vector<bool> seen(sigma.size(), false);
  std::vector<int> out(sigma.size());
  for (size_t p = 0; p < sigma.size(); ++p) {
    int b = sigma[p];
    if (b < 0 || b >= size() || seen[static_cast<size_t>(b)])
      throw DomainError("precondition", "sigma is not a permutation of the blocks");
    seen[static_cast<size_t>(b)] = true;
    out[p] = parts_[static_cast<size_t>(b)];
  }
  return Composition(std::move(out));
}

std::string Composition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Composition> all_compositions(int max_parts, int max_part) {
  std::vector<Composition> out;
  std::vector<int> cur;
  // Depth-first with parts appended in increasing lexicographic order.
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::stable_sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
  });
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  if (n > 0) rec(rec, n);
  return out;
}

}  // namespace lperiod

#pragma once

#include <string>
#include <vector>

namespace lperiod {

// A composition of N: an ordered tuple of strictly positive parts.  These
// index the standard (block upper triangular) parabolic subgroups of GL_N:
// parts (n_1, ..., n_k) <-> block sizes of the Levi GL_{n_1} x ... x GL_{n_k}.
//
// Internally everything is 0-based; serialized forms are 1-based.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  // Convenience for subgroup shapes like (n, n+m) where one entry may be 0:
  // zero entries are dropped, the rest must be positive.
  static Composition dropping_zeros(const std::vector<int>& parts);

  int size() const { return static_cast<int>(parts_.size()); }  // number of blocks k
  int total() const { return total_; }                          // N
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  // Half-open position range [begin, end) of block i inside {0, ..., N-1}.
  int block_begin(int i) const { return offsets_[static_cast<size_t>(i)]; }
  int block_end(int i) const { return offsets_[static_cast<size_t>(i)] + parts_[static_cast<size_t>(i)]; }

  // Block containing position p.
  int block_of(int p) const;

  // New composition whose p-th part is part(sigma[p]); sigma must be a
  // permutation of {0..k-1}.
  Composition permuted(const std::vector<int>& sigma) const;

  bool operator==(const Composition&) const = default;

  std::string str() const;  // "(2,3)"

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// All compositions with at most `max_parts` parts, each part in [1, max_part].
// Enumeration order: by part count, then lexicographic.  Handy for sweeps.
std::vector<Composition> all_compositions(int max_parts, int max_part);

// All compositions of exactly N (2^(N-1) of them), lexicographic.
std::vector<Composition> compositions_of(int n);

}  // namespace lperiod

#pragma once

#include <cstdint>
#include <vector>

namespace lperiod {

bool is_prime(int q);
int fq_inv(int a, int q);  // inverse mod prime q, a != 0 (mod q)

// Dense matrix over the prime field F_q.  Entries are kept reduced to
// {0, ..., q-1}.  Row vectors span subspaces; the canonical basis of a
// subspace is the reduced row echelon form of any spanning set.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int q, int rows, int cols);
  static FqMatrix identity(int q, int n);

  int q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v) { a_[static_cast<size_t>(r) * cols_ + c] = mod(v); }

  FqMatrix mul(const FqMatrix& rhs) const;
  FqMatrix transpose() const;
  FqMatrix pow(long long e) const;  // square matrices

  // Gauss-Jordan; returns the rank.  Zero rows are NOT removed.
  int rref_in_place();
  FqMatrix rref_trimmed() const;  // RREF with zero rows dropped
  int rank() const;

  static FqMatrix vstack(const FqMatrix& top, const FqMatrix& bottom);

  // Basis of the right nullspace { x : A x = 0 }, one row per free column.
  FqMatrix nullspace() const;

  // Is the row vector v in the row space?  (Independent of rref: solves the
  // augmented system by elimination on a scratch copy.)
  bool row_space_contains(const std::vector<int>& v) const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  int mod(long long v) const {
    int r = static_cast<int>(v % q_);
    return r < 0 ? r + q_ : r;
  }

  int q_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
};

}  // namespace lperiod

#include "lperiod/fq_matrix.hpp"

#include "lperiod/errors.hpp"

namespace lperiod {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int fq_inv(int a, int q) {
  // Extended Euclid; q prime and a nonzero mod q.
  a %= q;
  if (a < 0) a += q;
  if (a == 0) throw DomainError("precondition", "inverse of 0 in F_q");
  int r0 = q, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    int c = r0 / r1;
    int r2 = r0 - c * r1;
    int s2 = s0 - c * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  return s0 < 0 ? s0 + q : s0;
}

FqMatrix::FqMatrix(int q, int rows, int cols) : q_(q), rows_(rows), cols_(cols) {
  if (!is_prime(q)) throw DomainError("precondition", "F_q needs a prime q");
  if (rows < 0 || cols < 0) throw DomainError("precondition", "negative matrix shape");
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
}

FqMatrix FqMatrix::identity(int q, int n) {
  FqMatrix m(q, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& rhs) const {
  if (cols_ != rhs.rows_ || q_ != rhs.q_)
    throw DomainError("precondition", "matrix product shape mismatch");
  FqMatrix out(q_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.set(i, j, out.at(i, j) + aik * rhs.at(k, j));
    }
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(q_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

FqMatrix FqMatrix::pow(long long e) const {
  if (rows_ != cols_) throw DomainError("precondition", "power of a non-square matrix");
  FqMatrix base = *this;
  FqMatrix acc = identity(q_, rows_);
  while (e > 0) {
    if (e & 1) acc = acc.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return acc;
}

int FqMatrix::rref_in_place() {
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols_; ++j) {
        int tmp = at(lead, j);
        set(lead, j, at(pivot, j));
        set(pivot, j, tmp);
      }
    int inv = fq_inv(at(lead, col), q_);
    for (int j = 0; j < cols_; ++j) set(lead, j, at(lead, j) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      int f = at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j) set(r, j, at(r, j) - f * at(lead, j));
    }
    ++lead;
  }
  return lead;
}

FqMatrix FqMatrix::rref_trimmed() const {
  FqMatrix tmp = *this;
  int rank = tmp.rref_in_place();
  FqMatrix out(q_, rank, cols_);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, tmp.at(i, j));
  return out;
}

int FqMatrix::rank() const {
  FqMatrix tmp = *this;
  return tmp.rref_in_place();
}

FqMatrix FqMatrix::vstack(const FqMatrix& top, const FqMatrix& bottom) {
  if (top.cols_ != bottom.cols_ || top.q_ != bottom.q_)
    throw DomainError("precondition", "vstack shape mismatch");
  FqMatrix out(top.q_, top.rows_ + bottom.rows_, top.cols_);
  for (int i = 0; i < top.rows_; ++i)
    for (int j = 0; j < top.cols_; ++j) out.set(i, j, top.at(i, j));
  for (int i = 0; i < bottom.rows_; ++i)
    for (int j = 0; j < bottom.cols_; ++j) out.set(top.rows_ + i, j, bottom.at(i, j));
  return out;
}

FqMatrix FqMatrix::nullspace() const {
  FqMatrix r = *this;
  int rank = r.rref_in_place();
  // Pivot columns of the RREF; the rest are free.
  std::vector<int> pivot_col(static_cast<size_t>(rank));
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int i = 0, col = 0; i < rank; ++i) {
    while (r.at(i, col) == 0) ++col;
    pivot_col[static_cast<size_t>(i)] = col;
    is_pivot[static_cast<size_t>(col)] = true;
  }
  FqMatrix out(q_, cols_ - rank, cols_);
  int row = 0;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    out.set(row, free, 1);
    for (int i = 0; i < rank; ++i)
      out.set(row, pivot_col[static_cast<size_t>(i)], -r.at(i, free));
    ++row;
  }
  return out;
}

bool FqMatrix::row_space_contains(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DomainError("precondition", "vector length mismatch");
  // Forward elimination of v against a scratch copy of the rows; v lies in
  // the span iff it reduces to zero.  No RREF comparison involved.
  FqMatrix rows = *this;
  std::vector<int> w(v);
  for (auto& x : w) x = ((x % q_) + q_) % q_;
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r)
      if (rows.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols_; ++j) {
        int tmp = rows.at(lead, j);
        rows.set(lead, j, rows.at(pivot, j));
        rows.set(pivot, j, tmp);
      }
    int inv = fq_inv(rows.at(lead, col), q_);
    for (int j = 0; j < cols_; ++j) rows.set(lead, j, rows.at(lead, j) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      int f = rows.at(r, col);
      if (f != 0)
        for (int j = 0; j < cols_; ++j) rows.set(r, j, rows.at(r, j) - f * rows.at(lead, j));
    }
    if (w[static_cast<size_t>(col)] != 0) {
      int f = w[static_cast<size_t>(col)];
      for (int j = 0; j < cols_; ++j)
        w[static_cast<size_t>(j)] =
            ((w[static_cast<size_t>(j)] - f * rows.at(lead, j)) % q_ + q_) % q_;
    }
    ++lead;
  }
  for (int x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace lperiod

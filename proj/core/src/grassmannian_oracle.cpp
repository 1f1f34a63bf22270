#include "lperiod/grassmannian_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "lperiod/errors.hpp"

namespace lperiod {

int RepSpec::dimension() const {
  int d = 0;
  for (const auto& b : blocks) d += b.dim;
  return d;
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) {
    __int128 p = static_cast<__int128>(r) * b;
    if (p > INT64_MAX) throw std::overflow_error("power overflow");
    r = static_cast<long long>(p);
  }
  return r;
}

int mod_pow(int base, long long e, int q) {
  long long r = 1 % q, b = base % q;
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int multiplicative_order(int a, int q) {
  int v = a % q, r = 1;
  int x = v;
  while (x != 1) {
    x = x * v % q;
    ++r;
    if (r > q) throw DomainError("precondition", "order computation ran away");
  }
  return r;
}

int primitive_root(int q) {
  if (q == 2) return 1;
  for (int g = 2; g < q; ++g)
    if (multiplicative_order(g, q) == q - 1) return g;
  throw DomainError("precondition", "no primitive root (q not prime?)");
}

void validate_spec(const RepSpec& spec) {
  if (spec.r1 < 1) throw DomainError("rep_spec", "group order must be positive", "group");
  if (spec.kind == GroupKind::product && spec.r2 < 1)
    throw DomainError("rep_spec", "second factor order must be positive", "group");
  if (spec.kind == GroupKind::cyclic && spec.r2 != 0)
    throw DomainError("rep_spec", "cyclic group takes a single order", "group");
  if (spec.blocks.empty()) throw DomainError("rep_spec", "need at least one block", "blocks");
  const int gens = spec.num_generators();
  for (size_t i = 0; i < spec.blocks.size(); ++i) {
    const BlockSpec& b = spec.blocks[i];
    const std::string path = "blocks[" + std::to_string(i) + "]";
    if (b.tag.empty()) throw DomainError("rep_spec", "empty block tag", path + ".tag");
    if (b.dim != 1 && b.dim != 2)
      throw DomainError("rep_spec", "block dimension must be 1 or 2", path + ".dim");
    if (b.dim == 2 && spec.kind != GroupKind::cyclic)
      throw DomainError("rep_spec", "2-dimensional blocks are supported for cyclic groups only",
                        path + ".dim");
    const size_t want = b.dim == 2 ? 1 : static_cast<size_t>(gens);
    if (b.character.size() != want)
      throw DomainError("rep_spec",
                        "character needs " + std::to_string(want) + " exponent(s)",
                        path + ".character");
  }
  if (spec.n < 0 || spec.n > spec.dimension())
    throw DomainError("rep_spec", "n must lie between 0 and the total dimension", "n");

  // Same tag = same representation; distinct tags must differ as data.
  for (size_t i = 0; i < spec.blocks.size(); ++i)
    for (size_t j = i + 1; j < spec.blocks.size(); ++j) {
      const BlockSpec& a = spec.blocks[i];
      const BlockSpec& b = spec.blocks[j];
      const bool same_data = a.dim == b.dim && a.character == b.character;
      if (a.tag == b.tag && !same_data)
        throw DomainError("rep_spec", "tag '" + a.tag + "' reused with different data",
                          "blocks[" + std::to_string(j) + "]");
      if (a.tag != b.tag && same_data)
        throw DomainError("rep_spec",
                          "blocks " + std::to_string(i) + " and " + std::to_string(j) +
                              " are identical but carry distinct tags",
                          "blocks[" + std::to_string(j) + "]");
    }
}

int reduce_exponent(int c, int r) {
  int v = c % r;
  return v < 0 ? v + r : v;
}

// Scalar value of the character "generator -> zeta_r^c" over F_q, where
// zeta_r is a fixed primitive r-th root of unity.  Exists iff the exact order
// r / gcd(c, r) divides q - 1.
int character_value(int c, int r, int q, int prim) {
  c = reduce_exponent(c, r);
  const int g = std::gcd(c, r);
  const int ord = r / g;
  if ((q - 1) % ord != 0)
    throw DomainError("inadmissible_q",
                      "character of order " + std::to_string(ord) + " needs " +
                          std::to_string(ord) + " | q-1; q = " + std::to_string(q));
  if (ord == 1) return 1;
  const int omega = mod_pow(prim, (q - 1) / ord, q);  // exact order `ord`
  return mod_pow(omega, c / g, q);
}

// The canonical order-r element of GL_2(F_q) acting irreducibly: companion
// matrix of the first (lexicographic) monic irreducible quadratic whose
// companion has multiplicative order exactly r.  Exists iff r | q^2 - 1 and
// r does not divide q - 1.
FqMatrix order_r_plane(int r, int q) {
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      // t^2 + a t + b; irreducible iff it has no root in F_q.
      bool has_root = false;
      for (int t = 0; t < q && !has_root; ++t)
        if ((t * t + a * t + b) % q == 0) has_root = true;
      if (has_root) continue;
      FqMatrix comp(q, 2, 2);
      comp.set(0, 1, 1);
      comp.set(1, 0, -b);
      comp.set(1, 1, -a);
      // Multiplicative order of the companion matrix.
      FqMatrix x = comp;
      const FqMatrix id = FqMatrix::identity(q, 2);
      int ord = 1;
      while (!(x == id)) {
        x = x.mul(comp);
        ++ord;
        if (ord > q * q) break;
      }
      if (ord == r) return comp;
    }
  throw DomainError("inadmissible_q", "no irreducible plane of order " + std::to_string(r) +
                                          " over F_" + std::to_string(q));
}

bool plane_is_irreducible(const FqMatrix& b) {
  // char poly t^2 - tr t + det has no root in F_q.
  const int q = b.q();
  const int tr = (b.at(0, 0) + b.at(1, 1)) % q;
  const int det = ((b.at(0, 0) * b.at(1, 1) - b.at(0, 1) * b.at(1, 0)) % q + q) % q;
  for (int t = 0; t < q; ++t)
    if (((t * t - tr * t + det) % q + q) % q == 0) return false;
  return true;
}

}  // namespace

FqMatrixRep FqMatrixRep::materialize(const RepSpec& spec, int q) {
  validate_spec(spec);
  if (!is_prime(q))
    throw DomainError("inadmissible_q", "q = " + std::to_string(q) + " is not prime");
  if (spec.group_order() % q == 0)
    throw DomainError("inadmissible_q",
                      "q = " + std::to_string(q) + " divides the group order; the "
                      "semisimplicity assumption fails");

  const int prim = primitive_root(q);
  const int dim = spec.dimension();
  const int gens = spec.num_generators();

  FqMatrixRep rep;
  rep.spec_ = spec;
  rep.q_ = q;
  rep.dim_ = dim;
  for (int g = 0; g < gens; ++g) rep.gens_.push_back(FqMatrix::identity(q, dim));

  // 2-dimensional blocks all come from powers of one canonical plane.
  bool need_plane = false;
  for (const auto& b : spec.blocks) need_plane |= (b.dim == 2);
  FqMatrix plane(q, 0, 0);
  if (need_plane) {
    if ((ipow(q, 2) - 1) % spec.r1 != 0 || (q - 1) % spec.r1 == 0)
      throw DomainError("inadmissible_q", "2-dimensional blocks need r | q^2-1 and r not | q-1");
    plane = order_r_plane(spec.r1, q);
  }

  int offset = 0;
  std::vector<std::vector<int>> values(spec.blocks.size());  // dim-1 values per generator
  std::vector<int> plane_exponent(spec.blocks.size(), -1);
  for (size_t bi = 0; bi < spec.blocks.size(); ++bi) {
    const BlockSpec& b = spec.blocks[bi];
    rep.offsets_.push_back(offset);
    if (b.dim == 1) {
      const int orders[2] = {spec.r1, spec.r2};
      for (int g = 0; g < gens; ++g) {
        int v = character_value(b.character[static_cast<size_t>(g)], orders[g], q, prim);
        values[bi].push_back(v);
        rep.gens_[static_cast<size_t>(g)].set(offset, offset, v);
      }
      offset += 1;
    } else {
      const int c = reduce_exponent(b.character[0], spec.r1);
      FqMatrix power = plane.pow(c == 0 ? spec.r1 : c);  // c = 0 would be reducible anyway
      if (!plane_is_irreducible(power))
        throw DomainError("inadmissible_q",
                          "declared irreducible plane (exponent " + std::to_string(c) +
                              ") is reducible over F_" + std::to_string(q));
      plane_exponent[bi] = c;
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) rep.gens_[0].set(offset + r, offset + s, power.at(r, s));
      offset += 2;
    }
  }

  // Distinct tags must stay non-isomorphic after reduction mod q: equal
  // scalar tuples, or Frobenius-conjugate plane exponents (c ~ c q mod r),
  // would silently merge two declared-distinct representations.
  for (size_t i = 0; i < spec.blocks.size(); ++i)
    for (size_t j = i + 1; j < spec.blocks.size(); ++j) {
      if (spec.blocks[i].tag == spec.blocks[j].tag) continue;
      if (spec.blocks[i].dim == 1 && spec.blocks[j].dim == 1 && values[i] == values[j])
        throw DomainError("inadmissible_q", "blocks '" + spec.blocks[i].tag + "' and '" +
                                                spec.blocks[j].tag +
                                                "' collapse to the same character over F_" +
                                                std::to_string(q));
      if (spec.blocks[i].dim == 2 && spec.blocks[j].dim == 2) {
        const int r = spec.r1;
        const int ci = plane_exponent[i], cj = plane_exponent[j];
        if (cj == ci || cj == reduce_exponent(static_cast<int>(static_cast<long long>(ci) * q % r), r))
          throw DomainError("inadmissible_q", "planes '" + spec.blocks[i].tag + "' and '" +
                                                  spec.blocks[j].tag +
                                                  "' are Frobenius-conjugate over F_" +
                                                  std::to_string(q));
      }
    }

  // Defining relations, verified on the nose.
  const long long orders[2] = {spec.r1, spec.r2};
  const FqMatrix id = FqMatrix::identity(q, dim);
  for (int g = 0; g < gens; ++g)
    if (!(rep.gens_[static_cast<size_t>(g)].pow(orders[g]) == id))
      throw DomainError("rep_spec", "generator relation g^r = 1 fails");
  if (gens == 2 && !(rep.gens_[0].mul(rep.gens_[1]) == rep.gens_[1].mul(rep.gens_[0])))
    throw DomainError("rep_spec", "generators do not commute");

  return rep;
}

// --- Subspace enumeration -----------------------------------------------------

namespace {

// One RREF pivot pattern: the pivot columns, ascending, plus the list of free
// cells (row, col) it carries.
struct PivotPattern {
  std::vector<int> pivots;
  std::vector<std::pair<int, int>> free_cells;
};

std::vector<PivotPattern> pivot_patterns(int dim, int d) {
  std::vector<PivotPattern> out;
  std::vector<int> cols(static_cast<size_t>(d));
  std::iota(cols.begin(), cols.end(), 0);
  auto emit = [&]() {
    PivotPattern p;
    p.pivots = cols;
    for (int row = 0; row < d; ++row)
      for (int col = cols[static_cast<size_t>(row)] + 1; col < dim; ++col) {
        bool is_pivot = std::binary_search(cols.begin(), cols.end(), col);
        if (!is_pivot) p.free_cells.emplace_back(row, col);
      }
    out.push_back(std::move(p));
  };
  if (d == 0) {
    out.push_back(PivotPattern{});
    return out;
  }
  if (d > dim) return out;
  // Lexicographic combinations.
  while (true) {
    emit();
    int i = d - 1;
    while (i >= 0 && cols[static_cast<size_t>(i)] == dim - d + i) --i;
    if (i < 0) break;
    ++cols[static_cast<size_t>(i)];
    for (int j = i + 1; j < d; ++j) cols[static_cast<size_t>(j)] = cols[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

bool subspace_invariant(const FqMatrix& basis, const std::vector<FqMatrix>& gen_t) {
  for (const FqMatrix& gt : gen_t) {
    FqMatrix image = basis.mul(gt);
    if (!(image.rref_trimmed() == basis)) return false;
  }
  return true;
}

// All invariant d-dimensional subspaces as canonical RREF bases, in pattern-
// major order.  Work is split by pattern across threads; the merged order is
// thread-count independent.
std::vector<FqMatrix> invariant_subspaces(const FqMatrixRep& rep, int d,
                                          const OracleOptions& opts) {
  const int dim = rep.dimension();
  const int q = rep.q();
  std::vector<FqMatrix> gen_t;
  for (const FqMatrix& g : rep.generators()) gen_t.push_back(g.transpose());

  std::vector<PivotPattern> patterns = pivot_patterns(dim, d);

  // Combinatorial self-check: the patterns must tile the whole Grassmannian.
  long long candidates = 0;
  for (const auto& p : patterns) candidates += ipow(q, static_cast<int>(p.free_cells.size()));
  if (candidates != gaussian_binomial(dim, d, q))
    throw DomainError("precondition", "pivot patterns do not tile the Grassmannian");

  std::vector<std::vector<FqMatrix>> buckets(patterns.size());
  auto run_pattern = [&](size_t pi) {
    const PivotPattern& p = patterns[pi];
    FqMatrix basis(q, d, dim);
    for (int row = 0; row < d; ++row) basis.set(row, p.pivots[static_cast<size_t>(row)], 1);
    const size_t nfree = p.free_cells.size();
    std::vector<int> odo(nfree, 0);
    while (true) {
      if (subspace_invariant(basis, gen_t)) buckets[pi].push_back(basis);
      // Advance the odometer over free cells (row-major, least significant last).
      size_t i = nfree;
      while (i > 0) {
        --i;
        auto [r, c] = p.free_cells[i];
        int v = basis.at(r, c) + 1;
        if (v < q) {
          basis.set(r, c, v);
          break;
        }
        basis.set(r, c, 0);
        if (i == 0) return;
      }
      if (nfree == 0) return;
    }
  };

  int threads = std::clamp(opts.threads, 1, 16);
  if (threads <= 1 || patterns.size() <= 1) {
    for (size_t pi = 0; pi < patterns.size(); ++pi) run_pattern(pi);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&]() {
        for (size_t pi = next.fetch_add(1); pi < patterns.size(); pi = next.fetch_add(1))
          run_pattern(pi);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<FqMatrix> out;
  for (auto& b : buckets)
    for (auto& m : b) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::vector<InvariantSplitting> enumerate_splittings(const FqMatrixRep& rep, int n,
                                                     const OracleOptions& opts) {
  const int dim = rep.dimension();
  if (n < 0 || n > dim)
    throw DomainError("precondition", "requested dimension outside [0, dim]");
  long long candidates =
      gaussian_binomial(dim, n, rep.q()) + gaussian_binomial(dim, dim - n, rep.q());
  if (candidates > opts.enumeration_budget)
    throw DomainError("caps", "enumeration budget exceeded: " + std::to_string(candidates) +
                                  " candidate subspaces");

  std::vector<FqMatrix> vs = invariant_subspaces(rep, n, opts);
  std::vector<FqMatrix> ws =
      n == dim - n ? vs : invariant_subspaces(rep, dim - n, opts);

  std::vector<InvariantSplitting> out;
  out.reserve(vs.size());
  for (const FqMatrix& v : vs) {
    bool found = false;
    for (const FqMatrix& w : ws) {
      if (FqMatrix::vstack(v, w).rank() == dim) {
        out.push_back(InvariantSplitting{v, w});
        found = true;
        break;
      }
    }
    if (!found)
      throw DomainError("precondition",
                        "invariant subspace without invariant complement; semisimplicity violated");
  }
  return out;
}

bool verify_splitting(const FqMatrixRep& rep, int n, const InvariantSplitting& s) {
  const int dim = rep.dimension();
  if (s.v_basis.rows() != n || s.w_basis.rows() != dim - n) return false;
  if (s.v_basis.cols() != dim || s.w_basis.cols() != dim) return false;
  if (s.v_basis.rank() != n || s.w_basis.rank() != dim - n) return false;
  if (FqMatrix::vstack(s.v_basis, s.w_basis).rank() != dim) return false;
  for (const FqMatrix& g : rep.generators()) {
    FqMatrix gt = g.transpose();
    for (const FqMatrix* basis : {&s.v_basis, &s.w_basis}) {
      FqMatrix image = basis->mul(gt);
      for (int r = 0; r < image.rows(); ++r) {
        std::vector<int> row(static_cast<size_t>(image.cols()));
        for (int c = 0; c < image.cols(); ++c) row[static_cast<size_t>(c)] = image.at(r, c);
        if (!basis->row_space_contains(row)) return false;
      }
    }
  }
  return true;
}

namespace {

// Matrix of the action of g on the subspace in its RREF basis, acting on row
// coordinates: image_row_i = sum_j M[i][j] basis_row_j.
FqMatrix action_on_rows(const FqMatrix& basis, const FqMatrix& g_transposed) {
  FqMatrix image = basis.mul(g_transposed);
  // RREF basis: coordinates are read off at the pivot columns.
  const int d = basis.rows();
  std::vector<int> pivots;
  for (int i = 0, col = 0; i < d; ++i) {
    while (basis.at(i, col) == 0) ++col;
    pivots.push_back(col);
  }
  FqMatrix m(basis.q(), d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.set(i, j, image.at(i, pivots[static_cast<size_t>(j)]));
  return m;
}

// dim of { S : rho_W(g) S = S rho_V(g) for all g }, where rho acts on column
// coordinates (the transpose of the row action).
long long intertwiner_nullity(const std::vector<FqMatrix>& xv, const std::vector<FqMatrix>& xw,
                              int q) {
  const int dv = xv.empty() ? 0 : xv.front().rows();
  const int dw = xw.empty() ? 0 : xw.front().rows();
  if (dv == 0 || dw == 0) return 0;
  const int nunk = dv * dw;
  FqMatrix system(q, static_cast<int>(xv.size()) * nunk, nunk);
  int row = 0;
  for (size_t g = 0; g < xv.size(); ++g) {
    // rho = X^T; condition (X_W^T) S - S (X_V^T) = 0, entrywise:
    //   sum_k XW[k][a] S[k][b] - sum_k S[a][k] XV[b][k] = 0  for all a, b.
    for (int a = 0; a < dw; ++a)
      for (int b = 0; b < dv; ++b) {
        for (int k = 0; k < dw; ++k)
          system.set(row, k * dv + b, system.at(row, k * dv + b) + xw[g].at(k, a));
        for (int k = 0; k < dv; ++k)
          system.set(row, a * dv + k, system.at(row, a * dv + k) - xv[g].at(b, k));
        ++row;
      }
  }
  return nunk - system.rank();
}

}  // namespace

TangentReport tangent_dimension(const FqMatrixRep& rep, const InvariantSplitting& s) {
  const long long dv = s.v_basis.rows();
  const long long dw = s.w_basis.rows();
  TangentReport out;
  out.total_dim = 2 * dv * dw;
  std::vector<FqMatrix> xv, xw;
  for (const FqMatrix& g : rep.generators()) {
    FqMatrix gt = g.transpose();
    xv.push_back(action_on_rows(s.v_basis, gt));
    xw.push_back(action_on_rows(s.w_basis, gt));
  }
  out.equivariant_dim =
      intertwiner_nullity(xv, xw, rep.q()) + intertwiner_nullity(xw, xv, rep.q());
  return out;
}

long long gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  __int128 r = 1;
  for (int i = 0; i < k; ++i) {
    __int128 num = static_cast<__int128>(ipow(q, n - i)) - 1;
    __int128 den = static_cast<__int128>(ipow(q, i + 1)) - 1;
    r = r * num / den;
    if (r > INT64_MAX) throw std::overflow_error("gaussian binomial overflow");
  }
  return static_cast<long long>(r);
}

long long balanced_subset_count(const RepSpec& spec) {
  long long count = 0;
  auto rec = [&](auto&& self, size_t i, int sum) -> void {
    if (sum == spec.n) {
      ++count;
      return;
    }
    if (i == spec.blocks.size() || sum > spec.n) return;
    self(self, i + 1, sum + spec.blocks[i].dim);
    self(self, i + 1, sum);
  };
  rec(rec, 0, 0);
  return count;
}

namespace {

bool multiplicity_free_cuts(const RepSpec& spec) {
  const size_t k = spec.blocks.size();
  bool ok = true;
  auto check_cut = [&](const std::vector<bool>& in) {
    for (size_t i = 0; i < k && ok; ++i)
      for (size_t j = 0; j < k && ok; ++j)
        if (in[i] && !in[j] && spec.blocks[i].tag == spec.blocks[j].tag) ok = false;
  };
  std::vector<bool> in(k, false);
  auto rec = [&](auto&& self, size_t i, int sum) -> void {
    if (!ok) return;
    if (sum == spec.n) {
      check_cut(in);
      return;
    }
    if (i == k || sum > spec.n) return;
    in[i] = true;
    self(self, i + 1, sum + spec.blocks[i].dim);
    in[i] = false;
    self(self, i + 1, sum);
  };
  rec(rec, 0, 0);
  return ok;
}

}  // namespace

FinitenessReport check_finiteness_criterion(const RepSpec& spec, const std::vector<int>& q_list,
                                            const OracleOptions& opts) {
  validate_spec(spec);
  if (q_list.empty())
    throw DomainError("precondition", "need at least one q", "q");

  FinitenessReport report;
  report.condition_holds = multiplicity_free_cuts(spec);
  report.subset_count = balanced_subset_count(spec);

  for (int q : q_list) {
    if (q > opts.q_hard_max)
      throw DomainError("caps", "q = " + std::to_string(q) + " exceeds the compiled ceiling " +
                                    std::to_string(opts.q_hard_max));
    if (q > opts.q_max)
      throw DomainError("caps", "q = " + std::to_string(q) + " exceeds the configured cap " +
                                    std::to_string(opts.q_max) + " (raise it explicitly)");
    FqMatrixRep rep = FqMatrixRep::materialize(spec, q);
    auto splittings = enumerate_splittings(rep, spec.n, opts);
    report.runs.push_back(FinitenessRun{q, static_cast<long long>(splittings.size())});
  }

  report.branch = report.condition_holds ? "finite" : "infinite";
  report.pass = true;
  for (const auto& run : report.runs) {
    if (report.condition_holds)
      report.pass = report.pass && run.count == report.subset_count;
    else
      report.pass = report.pass && run.count > report.subset_count;
  }
  return report;
}

}  // namespace lperiod

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lperiod/fq_matrix.hpp"

namespace lperiod {

// --- Representation specifications ------------------------------------------
//
// A block-diagonal matrix representation of a small abelian group over a
// prime field, given combinatorially so the same specification can be
// materialized over several admissible q.  Two blocks carrying the same tag
// must be identical specifications (they model equivalent representations);
// blocks with distinct tags must be non-isomorphic.

struct BlockSpec {
  std::string tag;
  int dim = 1;                 // 1, or 2 for an irreducible plane (cyclic groups)
  std::vector<int> character;  // generator exponents: one per generator (dim 1),
                               // a single exponent for dim 2
};

enum class GroupKind { cyclic, product };

struct RepSpec {
  GroupKind kind = GroupKind::cyclic;
  int r1 = 1;  // cyclic order, or first factor of the product
  int r2 = 0;  // second factor (product groups only)
  std::vector<BlockSpec> blocks;
  int n = 0;        // requested invariant-subspace dimension
  int default_q = 0;  // the q carried by the input document, if any

  long long group_order() const { return kind == GroupKind::cyclic ? r1 : static_cast<long long>(r1) * r2; }
  int num_generators() const { return kind == GroupKind::cyclic ? 1 : 2; }
  int dimension() const;  // sum of block dims
};

// A concrete matrix model over one F_q.  Validated at construction: q prime
// and coprime to the group order, generator relations hold exactly, declared
// 2-dimensional blocks are irreducible over F_q, equal tags carry equal data,
// distinct tags are non-isomorphic (for cyclic groups, Frobenius-twist
// equivalence of planes is accounted for).
class FqMatrixRep {
 public:
  static FqMatrixRep materialize(const RepSpec& spec, int q);

  int q() const { return q_; }
  int dimension() const { return dim_; }
  const RepSpec& spec() const { return spec_; }
  const std::vector<FqMatrix>& generators() const { return gens_; }

  // Offsets of each declared block inside {0..dim-1}.
  int block_begin(int b) const { return offsets_[static_cast<size_t>(b)]; }

 private:
  FqMatrixRep() = default;
  RepSpec spec_;
  int q_ = 0;
  int dim_ = 0;
  std::vector<FqMatrix> gens_;
  std::vector<int> offsets_;
};

// --- Enumeration ------------------------------------------------------------

struct InvariantSplitting {
  FqMatrix v_basis;  // n x N, RREF rows
  FqMatrix w_basis;  // (N-n) x N, RREF rows, first invariant complement found
};

struct OracleOptions {
  int threads = 1;
  int q_max = 7;                              // default admissibility cap on q
  int q_hard_max = 97;                        // compiled ceiling
  long long enumeration_budget = 1LL << 27;   // max number of candidate subspaces
};

// All n-dimensional invariant subspaces paired with an invariant complement.
// Since q is coprime to the group order the representation is semisimple and
// every invariant subspace is complemented, so this enumerates the invariant
// points of the Grassmannian.  Order: pivot-column pattern (lexicographic),
// then free-entry odometer -- independent of the thread count.
std::vector<InvariantSplitting> enumerate_splittings(const FqMatrixRep& rep, int n,
                                                     const OracleOptions& opts = {});

// Re-verification on a code path independent of the enumerator: checks both
// bases are genuinely invariant vector-by-vector (membership via augmented
// elimination, not RREF comparison) and that V + W = F_q^N with V and W of
// the right dimensions.
bool verify_splitting(const FqMatrixRep& rep, int n, const InvariantSplitting& s);

struct TangentReport {
  long long total_dim = 0;       // dim Hom(V, W) + dim Hom(W, V) = 2 n (N - n)
  long long equivariant_dim = 0; // dim of the group-equivariant part
};

// Dimension data of the tangent space Hom(V, W) + Hom(W, V) at a splitting,
// with its equivariant part computed from the intertwiner linear systems.
TangentReport tangent_dimension(const FqMatrixRep& rep, const InvariantSplitting& s);

// Exact Gaussian binomial [n choose k]_q; overflow guarded.
long long gaussian_binomial(int n, int k, int q);

// Number of subsets of the declared blocks whose dimensions sum to n.
long long balanced_subset_count(const RepSpec& spec);

// --- Finiteness verdict -----------------------------------------------------

struct FinitenessRun {
  int q = 0;
  long long count = 0;
};

struct FinitenessReport {
  bool condition_holds = false;  // the multiplicity-free condition across every balanced cut
  long long subset_count = 0;
  std::vector<FinitenessRun> runs;
  std::string branch;  // "finite" | "infinite"
  bool pass = false;   // observed counts match the predicted branch at every q
};

// Brute-force check of the fixed-point finiteness dichotomy: when every
// balanced cut of the blocks is multiplicity-free the invariant count must
// equal the number of balanced subsets at every admissible q; otherwise the
// count must strictly exceed it (positive-dimensional fixed locus).
FinitenessReport check_finiteness_criterion(const RepSpec& spec, const std::vector<int>& q_list,
                                            const OracleOptions& opts = {});

}  // namespace lperiod

#include "lperiod/lexpr.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "lperiod/errors.hpp"

namespace lperiod {

std::string to_string(Completion c) {
  switch (c) {
    case Completion::complete: return "complete";
    case Completion::partial_s: return "partial_S";
    case Completion::local_s: return "local_S";
  }
  return "complete";
}

Completion completion_from_string(const std::string& s) {
  if (s == "complete") return Completion::complete;
  if (s == "partial_S") return Completion::partial_s;
  if (s == "local_S") return Completion::local_s;
  throw DomainError("schema", "unknown completion '" + s + "'", "completion");
}

RankinSelbergLeaf::RankinSelbergLeaf(RepRef a, RepRef b, Rational s_point, Completion comp)
    : left(std::move(a)), right(std::move(b)), s(s_point), completion(comp) {
  // The pairing is symmetric; keep the slots sorted so equal factors compare
  // equal regardless of how they were formed.
  if (right < left) std::swap(left, right);
}

EpsilonLeaf::EpsilonLeaf(RepRef a, RepRef b, Rational s_point)
    : left(std::move(a)), right(std::move(b)), s(s_point) {
  if (right < left) std::swap(left, right);
}

// --- Expression nodes --------------------------------------------------------

struct LExpr::Node {
  Kind kind = Kind::zero;
  std::optional<Leaf> leaf;     // kind == leaf
  std::vector<LExpr> children;  // inverse: 1 entry; product/sum: >= 2 entries
};

LExpr::LExpr() : node_(nullptr) {}
LExpr::LExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

LExpr::Kind LExpr::kind() const { return node_ ? node_->kind : Kind::zero; }

LExpr LExpr::zero() { return LExpr(); }

LExpr LExpr::leaf(Leaf l) {
  if (const auto* r = std::get_if<RationalLeaf>(&l); r && r->value.is_zero()) return zero();
  auto n = std::make_shared<Node>();
  n->kind = Kind::leaf;
  n->leaf = std::move(l);
  return LExpr(std::move(n));
}

LExpr LExpr::constant(const Rational& r) { return leaf(RationalLeaf{r}); }

LExpr LExpr::one() { return constant(Rational(1)); }

bool LExpr::is_one() const {
  if (kind() != Kind::leaf) return false;
  const auto* r = std::get_if<RationalLeaf>(&*node_->leaf);
  return r && r->value == Rational(1);
}

const Leaf& LExpr::as_leaf() const {
  if (kind() != Kind::leaf) throw DomainError("precondition", "expression is not a leaf");
  return *node_->leaf;
}

const LExpr& LExpr::inverse_arg() const {
  if (kind() != Kind::inverse) throw DomainError("precondition", "expression is not an inverse");
  return node_->children.front();
}

const std::vector<LExpr>& LExpr::children() const {
  if (kind() != Kind::product && kind() != Kind::sum)
    throw DomainError("precondition", "expression has no child list");
  return node_->children;
}

LExpr LExpr::inverse(const LExpr& e) {
  switch (e.kind()) {
    case Kind::zero:
      throw DomainError("precondition", "inverse of the zero expression");
    case Kind::leaf:
      if (const auto* r = std::get_if<RationalLeaf>(&*e.node_->leaf))
        return constant(Rational(1) / r->value);
      break;
    case Kind::inverse:
      return e.inverse_arg();
    case Kind::product: {
      std::vector<LExpr> inv;
      inv.reserve(e.children().size());
      for (const LExpr& f : e.children()) inv.push_back(inverse(f));
      return product(std::move(inv));
    }
    case Kind::sum:
      break;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::inverse;
  n->children.push_back(e);
  return LExpr(std::move(n));
}

LExpr LExpr::product(std::vector<LExpr> factors) {
  Rational coef(1);
  std::vector<LExpr> flat;
  flat.reserve(factors.size());
  for (LExpr& f : factors) {
    switch (f.kind()) {
      case Kind::zero:
        return zero();
      case Kind::product:
        for (const LExpr& g : f.children()) {
          if (const auto* r = g.kind() == Kind::leaf ? std::get_if<RationalLeaf>(&*g.node_->leaf)
                                                     : nullptr)
            coef = coef * r->value;
          else
            flat.push_back(g);
        }
        break;
      case Kind::leaf:
        if (const auto* r = std::get_if<RationalLeaf>(&*f.node_->leaf)) {
          coef = coef * r->value;
          break;
        }
        [[fallthrough]];
      default:
        flat.push_back(std::move(f));
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const LExpr& a, const LExpr& b) { return compare(a, b) < 0; });
  if (coef != Rational(1)) flat.insert(flat.begin(), constant(coef));
  if (flat.empty()) return one();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::product;
  n->children = std::move(flat);
  return LExpr(std::move(n));
}

LExpr LExpr::sum(std::vector<LExpr> terms) {
  std::vector<LExpr> flat;
  flat.reserve(terms.size());
  for (LExpr& t : terms) {
    if (t.kind() == Kind::zero) continue;
    if (t.kind() == Kind::sum) {
      for (const LExpr& u : t.children()) flat.push_back(u);
      continue;
    }
    flat.push_back(std::move(t));
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->children = std::move(flat);
  return LExpr(std::move(n));
}

std::size_t LExpr::node_count() const {
  switch (kind()) {
    case Kind::zero:
    case Kind::leaf:
      return 1;
    case Kind::inverse:
      return 1 + inverse_arg().node_count();
    default: {
      std::size_t total = 1;
      for (const LExpr& c : children()) total += c.node_count();
      return total;
    }
  }
}

std::strong_ordering LExpr::compare(const LExpr& a, const LExpr& b) {
  auto rank = [](Kind k) {
    switch (k) {
      case Kind::zero: return 0;
      case Kind::leaf: return 1;
      case Kind::inverse: return 2;
      case Kind::product: return 3;
      case Kind::sum: return 4;
    }
    return 0;
  };
  if (auto c = rank(a.kind()) <=> rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case Kind::zero:
      return std::strong_ordering::equal;
    case Kind::leaf:
      return *a.node_->leaf <=> *b.node_->leaf;
    case Kind::inverse:
      return compare(a.inverse_arg(), b.inverse_arg());
    default: {
      const auto& ca = a.children();
      const auto& cb = b.children();
      size_t n = std::min(ca.size(), cb.size());
      for (size_t i = 0; i < n; ++i)
        if (auto c = compare(ca[i], cb[i]); c != 0) return c;
      return ca.size() <=> cb.size();
    }
  }
}

bool operator==(const LExpr& a, const LExpr& b) { return LExpr::compare(a, b) == 0; }

// --- Cancellation ------------------------------------------------------------

namespace {

// Remove the multiset intersection of nums and dens (exact leaf equality).
bool cancel_common(std::vector<Leaf>& nums, std::vector<Leaf>& dens) {
  bool changed = false;
  std::sort(nums.begin(), nums.end());
  std::sort(dens.begin(), dens.end());
  std::vector<Leaf> keep_n, keep_d;
  size_t i = 0, j = 0;
  while (i < nums.size() && j < dens.size()) {
    auto c = nums[i] <=> dens[j];
    if (c == 0) {
      ++i;
      ++j;
      changed = true;
    } else if (c < 0) {
      keep_n.push_back(nums[i++]);
    } else {
      keep_d.push_back(dens[j++]);
    }
  }
  for (; i < nums.size(); ++i) keep_n.push_back(nums[i]);
  for (; j < dens.size(); ++j) keep_d.push_back(dens[j]);
  nums = std::move(keep_n);
  dens = std::move(keep_d);
  return changed;
}

// partial_S * local_S at the same point is the completed value: merge one
// such pair into a complete leaf.  Returns whether anything merged.
bool recombine_completions(std::vector<Leaf>& leaves) {
  for (size_t i = 0; i < leaves.size(); ++i) {
    const auto* a = std::get_if<RankinSelbergLeaf>(&leaves[i]);
    if (!a || a->completion != Completion::partial_s) continue;
    for (size_t j = 0; j < leaves.size(); ++j) {
      const auto* b = std::get_if<RankinSelbergLeaf>(&leaves[j]);
      if (!b || b->completion != Completion::local_s) continue;
      if (a->left == b->left && a->right == b->right && a->s == b->s) {
        RankinSelbergLeaf merged(a->left, a->right, a->s, Completion::complete);
        leaves[i] = merged;
        leaves.erase(leaves.begin() + static_cast<long>(j));
        return true;
      }
    }
  }
  return false;
}

}  // namespace

LExpr cancel(const LExpr& e) {
  switch (e.kind()) {
    case LExpr::Kind::zero:
    case LExpr::Kind::leaf:
      return e;
    case LExpr::Kind::inverse:
      return LExpr::inverse(cancel(e.inverse_arg()));
    case LExpr::Kind::sum: {
      std::vector<LExpr> terms;
      terms.reserve(e.children().size());
      for (const LExpr& t : e.children()) terms.push_back(cancel(t));
      return LExpr::sum(std::move(terms));
    }
    case LExpr::Kind::product:
      break;
  }

  // Product: split into numerator leaves, denominator leaves, and opaque
  // factors (sums and their inverses), then run cancellation/recombination to
  // a fixed point.
  Rational coef(1);
  std::vector<Leaf> nums, dens;
  std::vector<LExpr> opaque;
  for (const LExpr& raw : e.children()) {
    LExpr f = cancel(raw);
    switch (f.kind()) {
      case LExpr::Kind::leaf:
        if (const auto* r = std::get_if<RationalLeaf>(&f.as_leaf()))
          coef = coef * r->value;
        else
          nums.push_back(f.as_leaf());
        break;
      case LExpr::Kind::inverse: {
        const LExpr& arg = f.inverse_arg();
        if (arg.kind() == LExpr::Kind::leaf)
          dens.push_back(arg.as_leaf());
        else
          opaque.push_back(f);
        break;
      }
      default:
        opaque.push_back(f);
    }
  }

  bool changed = true;
  while (changed) {
    changed = cancel_common(nums, dens);
    changed = recombine_completions(nums) || changed;
    changed = recombine_completions(dens) || changed;
  }

  std::vector<LExpr> factors;
  factors.reserve(nums.size() + dens.size() + opaque.size() + 1);
  if (coef != Rational(1)) factors.push_back(LExpr::constant(coef));
  for (Leaf& l : nums) factors.push_back(LExpr::leaf(std::move(l)));
  for (Leaf& l : dens) factors.push_back(LExpr::inverse(LExpr::leaf(std::move(l))));
  for (LExpr& o : opaque) factors.push_back(std::move(o));
  return LExpr::product(std::move(factors));
}

// --- Pole bookkeeping ---------------------------------------------------------

namespace {

int leaf_pole_order(const Leaf& l) {
  const auto* rs = std::get_if<RankinSelbergLeaf>(&l);
  if (!rs) return 0;
  if (rs->completion == Completion::local_s) return 0;  // finite local product
  if (rs->s != Rational(1)) return 0;
  // Pole of L(s, A x B) at the edge exactly when B is the contragredient of A.
  bool contragredient = rs->left.dim == rs->right.dim && rs->left.label == rs->right.dual &&
                        rs->right.label == rs->left.dual;
  return contragredient ? 1 : 0;
}

}  // namespace

int pole_order_at_one(const LExpr& e) {
  switch (e.kind()) {
    case LExpr::Kind::zero:
      return 0;
    case LExpr::Kind::leaf:
      return leaf_pole_order(e.as_leaf());
    case LExpr::Kind::inverse:
      return -pole_order_at_one(e.inverse_arg());
    case LExpr::Kind::product: {
      int total = 0;
      for (const LExpr& f : e.children()) total += pole_order_at_one(f);
      return total;
    }
    case LExpr::Kind::sum: {
      int best = pole_order_at_one(e.children().front());
      for (const LExpr& t : e.children()) best = std::max(best, pole_order_at_one(t));
      return best;
    }
  }
  return 0;
}

// --- Datum-level constructors --------------------------------------------------

LExpr l_hat_n_minus(const CuspidalDatum& datum, Completion comp) {
  std::vector<LExpr> factors;
  for (int i = 0; i < datum.k(); ++i)
    for (int j = i + 1; j < datum.k(); ++j)
      factors.push_back(
          LExpr::leaf(RankinSelbergLeaf(datum.rep(i), datum.rep_dual(j), Rational(1), comp)));
  return LExpr::product(std::move(factors));
}

LExpr n_beta(const CuspidalDatum& datum, int i, int j, const Rational& s, NBetaForm form) {
  if (i < 0 || j <= i || j >= datum.k())
    throw DomainError("precondition", "n_beta needs block indices i < j inside the datum");
  const Rational one(1);
  if (form == NBetaForm::epsilon_free) {
    return LExpr::product(
        {LExpr::leaf(RankinSelbergLeaf(datum.rep_dual(i), datum.rep(j), one - s, Completion::complete)),
         LExpr::inverse(LExpr::leaf(
             RankinSelbergLeaf(datum.rep(i), datum.rep_dual(j), one + s, Completion::complete)))});
  }
  return LExpr::product(
      {LExpr::leaf(RankinSelbergLeaf(datum.rep(i), datum.rep_dual(j), s, Completion::complete)),
       LExpr::inverse(LExpr::leaf(EpsilonLeaf(datum.rep(i), datum.rep_dual(j), s))),
       LExpr::inverse(LExpr::leaf(
           RankinSelbergLeaf(datum.rep(i), datum.rep_dual(j), one + s, Completion::complete)))});
}

LExpr n_w(const CuspidalDatum& datum, const BlockPermutation& bp) {
  if (bp.underlying.source != datum.composition())
    throw DomainError("precondition", "block permutation does not act on this datum");
  std::vector<LExpr> factors;
  for (auto [i, j] : inverted_roots(bp)) factors.push_back(n_beta(datum, i, j, Rational(0)));
  return cancel(LExpr::product(std::move(factors)));
}

}  // namespace lperiod

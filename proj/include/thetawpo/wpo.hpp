#pragma once

// Constructors of well-partial-orders: finite posets, disjoint sum, product,
// Higman's finite sequences and structured binary trees, combined through the
// expression grammar W ::= _ | P | W + W | W x W | W* | B(W).
//
// A value of W(X) is a WElement whose holes carry opaque 64-bit carrier
// values; the order on the carrier is supplied by the caller.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetawpo {

// ---------------------------------------------------------------------------
// Finite posets.

class FinitePoset {
 public:
  /// The discrete order on `n` points.
  explicit FinitePoset(std::size_t n = 0);

  /// Reflexive-transitive closure of `pairs` (a <= b). Throws DomainError if
  /// the closure is not antisymmetric or an index is out of range.
  static FinitePoset generated(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs);
  /// Takes the full matrix as given. Throws DomainError unless it is a partial order.
  static FinitePoset from_matrix(const std::vector<std::vector<bool>>& leq);

  static FinitePoset chain(std::size_t n);

  std::size_t size() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b]; }

  /// Pairs a < b with nothing strictly between them.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::size_t n_;
  std::vector<bool> leq_;
};

/// Every partial order on {0, ..., n-1} (labelled, so isomorphic copies repeat).
std::vector<FinitePoset> all_posets(std::size_t n);

/// `P{n;a<b,...}` listing covering (or any generating) pairs.
std::string to_string(const FinitePoset& p);

// ---------------------------------------------------------------------------
// Constructor expressions.

enum class WKind : std::uint8_t { Hole, Const, Sum, Prod, Star, BTree };

class WExpr {
 public:
  static WExpr hole();
  static WExpr constant(FinitePoset p);
  static WExpr sum(WExpr a, WExpr b);
  static WExpr prod(WExpr a, WExpr b);
  static WExpr star(WExpr a);
  static WExpr btree(WExpr a);

  WKind kind() const;
  /// Left operand of Sum/Prod, operand of Star/BTree.
  const WExpr& left() const;
  const WExpr& right() const;
  const FinitePoset& poset() const;

  /// Identity of the underlying node; stable while any copy is alive.
  const void* key() const { return node_.get(); }

  friend bool operator==(const WExpr& a, const WExpr& b);

 private:
  struct Node;
  explicit WExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const WExpr& w);

/// Grammar, loosest first:  W := W '+' W | W 'x' W | W '*' | '_' | 'P{' n ';' pairs '}' | 'B(' W ')' | '(' W ')'.
/// Sum and product associate to the left. Throws ParseError.
WExpr parse_wexpr(std::string_view text);

// ---------------------------------------------------------------------------
// Elements.

enum class EKind : std::uint8_t { Hole, Const, Sum, Pair, List, BNode, BLeaf };

/// A value of W(X). Layout by kind:
///   Hole   value = carrier value
///   Const  value = index into the poset
///   Sum    value = side (0 left, 1 right), kids = {x}
///   Pair   kids = {x, y}
///   List   kids = items (Star)
///   BLeaf  kids = {label}, the label an element of the operand of B
///   BNode  kids = {left, right}
struct WElement {
  EKind kind = EKind::Hole;
  std::uint64_t value = 0;
  std::vector<WElement> kids;

  static WElement hole(std::uint64_t x) { return {EKind::Hole, x, {}}; }
  static WElement constant(std::uint64_t i) { return {EKind::Const, i, {}}; }
  static WElement inl(WElement x) { return {EKind::Sum, 0, {std::move(x)}}; }
  static WElement inr(WElement x) { return {EKind::Sum, 1, {std::move(x)}}; }
  static WElement pair(WElement x, WElement y) { return {EKind::Pair, 0, {std::move(x), std::move(y)}}; }
  static WElement list(std::vector<WElement> xs) { return {EKind::List, 0, std::move(xs)}; }
  static WElement leaf(WElement x) { return {EKind::BLeaf, 0, {std::move(x)}}; }
  static WElement node(WElement l, WElement r) { return {EKind::BNode, 0, {std::move(l), std::move(r)}}; }

  friend bool operator==(const WElement&, const WElement&) = default;
  friend auto operator<=>(const WElement&, const WElement&) = default;
};

/// Throws ShapeError unless `a` is shaped by `w`.
void check_shape(const WExpr& w, const WElement& a);

/// Carrier values in holes, left to right, depth first.
std::vector<std::uint64_t> hole_values(const WElement& a);

/// The naked term (every hole value reset to 0) and the hole contents.
std::pair<WElement, std::vector<std::uint64_t>> naked_term(const WElement& a);

/// Refills the holes of a naked term in order. Throws ShapeError on a count mismatch.
WElement substitute(const WElement& naked, std::span<const std::uint64_t> values);

/// Applies `f` to every hole value.
WElement map_holes(const WElement& a, const std::function<std::uint64_t(std::uint64_t)>& f);

/// Size: a hole costs the size of its value, a constant 1, a pair or list or
/// binary node 1 plus its parts; Sum tags and leaves add nothing of their own.
std::size_t element_size(const WElement& a, const std::function<std::size_t(std::uint64_t)>& carrier_size);

/// Every element of W(X) of exactly `size`, where `carrier_by_size[k]` lists
/// the carrier values of size k. Deterministic order, no duplicates.
std::vector<WElement> enumerate_elements(const WExpr& w, std::size_t size,
                                         const std::vector<std::vector<std::uint64_t>>& carrier_by_size);

// ---------------------------------------------------------------------------
// Orders.

using CarrierLeq = std::function<bool(std::uint64_t, std::uint64_t)>;

/// Higman's order: a strictly increasing index map i_1 < ... < i_n with x_j <= y_{i_j}.
/// Greedy leftmost matching.
template <typename T, typename Leq>
bool higman_leq(std::span<const T> xs, std::span<const T> ys, Leq&& leq) {
  std::size_t j = 0;
  for (const T& x : xs) {
    while (j < ys.size() && !leq(x, ys[j])) ++j;
    if (j == ys.size()) return false;
    ++j;
  }
  return true;
}

/// Higman's order decided by trying every strictly increasing index map.
bool higman_leq_exhaustive(std::span<const std::size_t> xs, std::span<const std::size_t> ys, const FinitePoset& p);

/// Embedding of structured binary trees (BLeaf/BNode elements), memoised over subtree pairs.
bool btree_embed(const WElement& s, const WElement& t, const std::function<bool(const WElement&, const WElement&)>& leaf_leq);

/// The same three-clause recursion without memoisation.
bool btree_embed_naive(const WElement& s, const WElement& t,
                       const std::function<bool(const WElement&, const WElement&)>& leaf_leq);

/// The order of W(X) given the order on X. Throws ShapeError on ill-shaped input.
bool w_leq(const WExpr& w, const WElement& a, const WElement& b, const CarrierLeq& base);

// ---------------------------------------------------------------------------
// Text.

using HolePrinter = std::function<std::string(std::uint64_t)>;

/// Pairs `(a, b)`, lists `[a, b]`, binary nodes `(l, r)`, leaves `leaf x`
/// (bare when the leaf is a hole), sums `inl x` / `inr x`, constants `#k`.
std::string to_string(const WExpr& w, const WElement& a, const HolePrinter& hole);

/// Parses an element shaped by `w` whose holes are natural numbers, written
/// `<k>` or `k`. Binary nodes may be written `(l, r)` or `(l r)`.
WElement parse_welement(const WExpr& w, std::string_view text);

// ---------------------------------------------------------------------------
// Quasi-embeddings between finite posets.

/// q(a) <= q(b) implies a <= b, for all a, b in `from`.
bool is_quasi_embedding(const FinitePoset& from, const FinitePoset& to, std::span<const std::size_t> q);

}  // namespace thetawpo

#pragma once

// Tree terms T(W): the circle o, and o[w(t1, ..., tn)] for an element w of W
// whose holes hold smaller tree terms. Terms are hash-consed like Ordinal: a
// handle compares equal to another exactly when the terms are identical.
// A term does not record its W; operations that depend on W take it as an
// argument and check the shape.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "thetawpo/wpo.hpp"

namespace thetawpo {

class TreeTerm {
 public:
  /// The circle.
  TreeTerm();

  /// o[body]; the hole values of `body` are ids of existing terms.
  /// Throws DomainError on an unknown id.
  static TreeTerm apply(WElement body);
  static TreeTerm from_id(std::uint32_t id);

  bool is_circ() const { return id_ == 0; }
  /// The body w(t1, ..., tn). Throws DomainError for the circle.
  const WElement& body() const;
  /// t1, ..., tn in hole order (with repetitions).
  std::vector<TreeTerm> children() const;

  /// Circles plus structural nodes of the bodies.
  std::size_t size() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(TreeTerm a, TreeTerm b) { return a.id_ == b.id_; }

 private:
  explicit TreeTerm(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

/// A hole holding `t`, for building bodies.
inline WElement hole(TreeTerm t) { return WElement::hole(t.id()); }

/// The element w(t1, ..., tn) of W(T(W)). Throws DomainError for the circle.
WElement components(TreeTerm t);

/// Throws ShapeError unless `t` and all its subterms are shaped by `w`.
void check_term(const WExpr& w, TreeTerm t);

/// Decides the order of T(W). The memo table lives as long as the object, so
/// reuse one instance for many queries against the same W.
class TreeOrder {
 public:
  explicit TreeOrder(WExpr w) : w_(std::move(w)) {}

  bool leq(TreeTerm s, TreeTerm t);
  const WExpr& w() const { return w_; }

 private:
  bool decide(TreeTerm s, TreeTerm t);
  void ensure_checked(TreeTerm t);

  WExpr w_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::unordered_set<std::uint32_t> checked_;
};

/// One-off query with a fresh memo table.
bool t_leq(TreeTerm s, TreeTerm t, const WExpr& w);

/// Every term of T(W) with at most `size_bound` nodes, by ascending size,
/// deterministic within a size.
std::vector<TreeTerm> enumerate_trees(const WExpr& w, std::size_t size_bound);

/// The least reflexive, transitive relation on `universe` closed under the
/// three generating clauses, computed by iteration to a fixpoint.
/// result[i][j] holds iff universe[i] <= universe[j]. Throws DomainError if the
/// universe is not closed under taking children.
std::vector<std::vector<bool>> closure_oracle(const std::vector<TreeTerm>& universe, const WExpr& w);

/// All s with size(s) <= size_bound and t not below s.
std::vector<TreeTerm> left_set_bounded(TreeTerm t, const WExpr& w, std::size_t size_bound);

/// For W = (_*)*: whether s lies in the left set of t, decided by the case
/// analysis on outer and inner sequence positions rather than by the order
/// itself. Requires t and s different from the circle.
bool xstarstar_membership_cases(TreeTerm t, TreeTerm s);

/// `o` and `o[E]`, E an element literal of W whose holes are tree terms.
std::string to_string(TreeTerm t, const WExpr& w);
TreeTerm parse_tree_term(std::string_view text, const WExpr& w);

/// Graphviz digraph: circles for o, small boxes for the structure of bodies.
std::string to_dot(TreeTerm t, const WExpr& w, std::string_view name = "T");

}  // namespace thetawpo

template <>
struct std::hash<thetawpo::TreeTerm> {
  std::size_t operator()(thetawpo::TreeTerm t) const noexcept { return std::hash<std::uint32_t>{}(t.id()); }
};

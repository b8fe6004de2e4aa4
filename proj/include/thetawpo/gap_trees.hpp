#pragma once

// Finite rooted trees with ordered children and natural-number labels, the
// weak gap embedding between them, the class of {0,1}-trees in which 0-nodes
// have at most one child and 1-nodes exactly two, and its correspondence with
// the tree terms over B(_).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "thetawpo/tree_terms.hpp"

namespace thetawpo {

struct LabeledTree {
  std::uint32_t label = 0;
  std::vector<LabeledTree> children;

  std::size_t size() const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
  /// Label first, then children lexicographically.
  friend bool operator<(const LabeledTree& a, const LabeledTree& b);
};

/// `(label child ...)`, e.g. `(0 (1 (0) (0)))`. Throws ParseError.
LabeledTree parse_labeled_tree(std::string_view text);
std::string to_string(const LabeledTree& t);
/// Graphviz digraph with the labels as node text, children left to right.
std::string to_dot(const LabeledTree& t, std::string_view name = "T");

/// Children sorted recursively; two trees are equal up to reordering children
/// iff their canonical forms are equal.
LabeledTree canonical(const LabeledTree& t);

/// Hash-consed store of trees; subtrees are interned before their parents, so
/// child ids are always smaller than the parent id.
class TreeIndex {
 public:
  std::uint32_t intern(const LabeledTree& t);
  /// Interns a node whose children are already interned.
  std::uint32_t intern_node(std::uint32_t label, const std::vector<std::uint32_t>& kids);

  std::size_t size() const { return labels_.size(); }
  std::uint32_t label(std::uint32_t id) const { return labels_[id]; }
  const std::vector<std::uint32_t>& children(std::uint32_t id) const { return kids_[id]; }
  LabeledTree tree(std::uint32_t id) const;

 private:
  std::vector<std::uint32_t> labels_;
  std::vector<std::vector<std::uint32_t>> kids_;
  std::unordered_map<std::string, std::uint32_t> table_;
};

/// Decides s <=gap target for many s against one target, memoised over the
/// subtrees of s (by TreeIndex id) and the nodes of the target.
class GapEmbedder {
 public:
  /// Targets are limited to 64 nodes; throws RangeError beyond that.
  GapEmbedder(const LabeledTree& target, bool structured);

  bool embeds(const LabeledTree& s);
  /// `id` refers to `index`; switching to another index clears the memo.
  bool embeds(const TreeIndex& index, std::uint32_t id);

 private:
  struct Masks {
    std::uint64_t root = 0;  // nodes v where the subtree can sit with its root at v
    std::uint64_t down = 0;  // nodes u whose subtree can receive it below a parent image
    bool done = false;
  };
  const Masks& masks(const TreeIndex& index, std::uint32_t id);
  bool match(const std::vector<std::uint32_t>& kids, std::size_t v);

  bool structured_;
  std::vector<std::uint32_t> label_;
  std::vector<std::vector<std::size_t>> kids_;
  std::vector<std::uint64_t> kid_mask_;
  const TreeIndex* bound_ = nullptr;
  std::vector<Masks> memo_;
  TreeIndex own_;
};

/// Weak gap embedding: an injective, label-, order- and infimum-preserving map
/// such that every node strictly between the images of a node and one of its
/// children has a label at least that of the child. With `structured` the map
/// must also keep the left-to-right order.
bool gap_leq(const LabeledTree& s, const LabeledTree& t, bool structured);

/// The same relation by trying every injective node map and checking each
/// condition literally. Throws RangeError when either tree has more than 10 nodes.
bool brute_gap_leq(const LabeledTree& s, const LabeledTree& t, bool structured);

/// Every tree that gap-embeds into `t`, found by listing each infimum-closed
/// node set of `t` that passes the gap condition and reading off the induced
/// tree. Unstructured results are in canonical form. Sorted, no duplicates.
/// Throws RangeError when `t` has more than 16 nodes.
std::vector<LabeledTree> gap_downset(const LabeledTree& t, bool structured);

/// All trees with at most `max_nodes` nodes and labels below `labels`, by
/// ascending size, deterministic within a size.
std::vector<LabeledTree> enumerate_labeled_trees(std::size_t max_nodes, std::uint32_t labels);

/// Root labelled 0, every 0-node with at most one child, every 1-node with exactly two.
bool in_t2bar(const LabeledTree& t);

/// The order isomorphism from the tree terms over B(_): the circle becomes a
/// single 0-node, o[b] a 0-node above the image of b, where binary nodes of b
/// become 1-nodes and leaves the images of their terms. Throws ShapeError if
/// `t` is not a term over B(_).
LabeledTree to_gap(TreeTerm t);
/// The inverse. Throws DomainError outside the class.
TreeTerm from_gap(const LabeledTree& t);

}  // namespace thetawpo

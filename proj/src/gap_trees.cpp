#include "thetawpo/gap_trees.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "cursor.hpp"
#include "thetawpo/errors.hpp"

namespace thetawpo {

std::size_t LabeledTree::size() const {
  std::size_t n = 1;
  for (const LabeledTree& c : children) n += c.size();
  return n;
}

bool operator<(const LabeledTree& a, const LabeledTree& b) {
  if (a.label != b.label) return a.label < b.label;
  return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(), b.children.end());
}

// ---------------------------------------------------------------------------
// Text

namespace {

LabeledTree read_tree(detail::Cursor& c) {
  c.expect("(");
  std::uint64_t label = c.number();
  if (label > UINT32_MAX) c.fail("label too large");
  LabeledTree t{static_cast<std::uint32_t>(label), {}};
  while (!c.eat(")")) {
    if (c.at_end()) c.fail("expected ')'");
    t.children.push_back(read_tree(c));
  }
  return t;
}

void write_tree(const LabeledTree& t, std::string& out) {
  out += '(' + std::to_string(t.label);
  for (const LabeledTree& c : t.children) {
    out += ' ';
    write_tree(c, out);
  }
  out += ')';
}

}  // namespace

LabeledTree parse_labeled_tree(std::string_view text) {
  detail::Cursor c(text);
  LabeledTree t = read_tree(c);
  c.finish();
  return t;
}

std::string to_string(const LabeledTree& t) {
  std::string out;
  write_tree(t, out);
  return out;
}

std::string to_dot(const LabeledTree& t, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n  node [shape=circle];\n";
  std::size_t next = 0;
  std::function<std::size_t(const LabeledTree&)> walk = [&](const LabeledTree& n) {
    std::size_t id = next++;
    out += "  n" + std::to_string(id) + " [label=\"" + std::to_string(n.label) + "\"];\n";
    for (const LabeledTree& c : n.children) {
      std::size_t cid = walk(c);
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(cid) + ";\n";
    }
    return id;
  };
  walk(t);
  out += "}\n";
  return out;
}

LabeledTree canonical(const LabeledTree& t) {
  LabeledTree out{t.label, {}};
  for (const LabeledTree& c : t.children) out.children.push_back(canonical(c));
  std::sort(out.children.begin(), out.children.end());
  return out;
}

// ---------------------------------------------------------------------------
// Index

std::uint32_t TreeIndex::intern_node(std::uint32_t label, const std::vector<std::uint32_t>& kids) {
  std::string key = std::to_string(label);
  for (std::uint32_t k : kids) {
    if (k >= labels_.size()) throw DomainError("unknown tree id " + std::to_string(k));
    key += ',' + std::to_string(k);
  }
  auto [it, fresh] = table_.emplace(std::move(key), static_cast<std::uint32_t>(labels_.size()));
  if (fresh) {
    labels_.push_back(label);
    kids_.push_back(kids);
  }
  return it->second;
}

std::uint32_t TreeIndex::intern(const LabeledTree& t) {
  std::vector<std::uint32_t> kids;
  for (const LabeledTree& c : t.children) kids.push_back(intern(c));
  return intern_node(t.label, kids);
}

LabeledTree TreeIndex::tree(std::uint32_t id) const {
  LabeledTree t{labels_.at(id), {}};
  for (std::uint32_t k : kids_[id]) t.children.push_back(tree(k));
  return t;
}

// ---------------------------------------------------------------------------
// Flat preorder view used by the embedder and the oracles.

namespace {

struct Flat {
  std::vector<std::uint32_t> label;
  std::vector<std::ptrdiff_t> parent;
  std::vector<std::vector<std::size_t>> kids;

  explicit Flat(const LabeledTree& t) { add(t, -1); }

  std::size_t size() const { return label.size(); }

  /// a is an ancestor of b or equal to it.
  bool below(std::size_t a, std::size_t b) const {
    for (std::ptrdiff_t x = static_cast<std::ptrdiff_t>(b); x >= 0; x = parent[x])
      if (static_cast<std::size_t>(x) == a) return true;
    return false;
  }

  std::size_t inf(std::size_t a, std::size_t b) const {
    for (std::ptrdiff_t x = static_cast<std::ptrdiff_t>(a); x >= 0; x = parent[x])
      if (below(static_cast<std::size_t>(x), b)) return static_cast<std::size_t>(x);
    throw InternalError("nodes without a common ancestor");
  }

 private:
  std::size_t add(const LabeledTree& t, std::ptrdiff_t par) {
    std::size_t id = label.size();
    label.push_back(t.label);
    parent.push_back(par);
    kids.emplace_back();
    for (const LabeledTree& c : t.children) {
      std::size_t cid = add(c, static_cast<std::ptrdiff_t>(id));
      kids[id].push_back(cid);
    }
    return id;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Memoised embedding

GapEmbedder::GapEmbedder(const LabeledTree& target, bool structured) : structured_(structured) {
  Flat f(target);
  if (f.size() > 64) throw RangeError("gap embedding targets are limited to 64 nodes");
  label_ = f.label;
  kids_ = f.kids;
  kid_mask_.assign(f.size(), 0);
  for (std::size_t v = 0; v < f.size(); ++v)
    for (std::size_t c : kids_[v]) kid_mask_[v] |= std::uint64_t{1} << c;
}

bool GapEmbedder::embeds(const LabeledTree& s) { return embeds(own_, own_.intern(s)); }

bool GapEmbedder::embeds(const TreeIndex& index, std::uint32_t id) {
  if (bound_ != &index) {
    bound_ = &index;
    memo_.clear();
  }
  return masks(index, id).root != 0;
}

const GapEmbedder::Masks& GapEmbedder::masks(const TreeIndex& index, std::uint32_t id) {
  if (memo_.size() < index.size()) memo_.resize(index.size());
  if (memo_[id].done) return memo_[id];
  const auto& kids = index.children(id);
  for (std::uint32_t k : kids) masks(index, k);

  Masks m;
  std::uint32_t l = index.label(id);
  std::size_t n = label_.size();
  for (std::size_t v = 0; v < n; ++v)
    if (label_[v] == l && kids.size() <= kids_[v].size() && match(kids, v)) m.root |= std::uint64_t{1} << v;
  // Children carry larger preorder numbers, so one reverse sweep settles the downward closure.
  m.down = m.root;
  for (std::size_t u = n; u-- > 0;)
    if (label_[u] >= l && (m.down & kid_mask_[u])) m.down |= std::uint64_t{1} << u;
  m.done = true;
  memo_[id] = m;
  return memo_[id];
}

bool GapEmbedder::match(const std::vector<std::uint32_t>& kids, std::size_t v) {
  const auto& slots = kids_[v];
  if (structured_) {
    std::size_t pos = 0;
    for (std::uint32_t c : kids) {
      std::uint64_t down = memo_[c].down;
      while (pos < slots.size() && !((down >> slots[pos]) & 1)) ++pos;
      if (pos == slots.size()) return false;
      ++pos;
    }
    return true;
  }
  // Bipartite matching of the children of s into distinct child subtrees of v.
  std::vector<std::ptrdiff_t> owner(slots.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    std::uint64_t down = memo_[kids[i]].down;
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (seen[j] || !((down >> slots[j]) & 1)) continue;
      seen[j] = true;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<std::ptrdiff_t>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::vector<bool> seen(slots.size(), false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

bool gap_leq(const LabeledTree& s, const LabeledTree& t, bool structured) {
  return GapEmbedder(t, structured).embeds(s);
}

// ---------------------------------------------------------------------------
// Brute force over node maps

namespace {

bool literal_conditions(const Flat& s, const Flat& t, const std::vector<std::size_t>& f, bool structured) {
  std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (s.below(a, b) && !t.below(f[a], f[b])) return false;
      if (f[s.inf(a, b)] != t.inf(f[a], f[b])) return false;
      if (structured && a < b && !s.below(a, b) && !(f[a] < f[b])) return false;
    }
  for (std::size_t c = 1; c < n; ++c) {
    std::size_t p = static_cast<std::size_t>(s.parent[c]);
    for (std::size_t y = 0; y < t.size(); ++y)
      if (y != f[p] && y != f[c] && t.below(f[p], y) && t.below(y, f[c]) && t.label[y] < s.label[c]) return false;
  }
  return true;
}

}  // namespace

bool brute_gap_leq(const LabeledTree& s, const LabeledTree& t, bool structured) {
  Flat fs(s), ft(t);
  if (fs.size() > 10 || ft.size() > 10) throw RangeError("brute-force gap embedding is limited to 10 nodes");
  std::vector<std::size_t> f(fs.size());
  std::vector<bool> used(ft.size(), false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == fs.size()) return literal_conditions(fs, ft, f, structured);
    for (std::size_t y = 0; y < ft.size(); ++y) {
      if (used[y] || ft.label[y] != fs.label[i]) continue;
      used[y] = true;
      f[i] = y;
      bool ok = assign(i + 1);
      used[y] = false;
      if (ok) return true;
    }
    return false;
  };
  return assign(0);
}

// ---------------------------------------------------------------------------
// Image sets

std::vector<LabeledTree> gap_downset(const LabeledTree& t, bool structured) {
  Flat ft(t);
  std::size_t n = ft.size();
  if (n > 16) throw RangeError("gap_downset is limited to 16 nodes");
  std::set<LabeledTree> found;
  for (std::uint32_t set = 1; set < (1u << n); ++set) {
    auto in = [&](std::size_t x) { return ((set >> x) & 1) != 0; };
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if (in(a) && in(b) && !in(ft.inf(a, b))) closed = false;
    if (!closed) continue;

    // Induced parent: the nearest proper ancestor inside the set.
    std::vector<std::ptrdiff_t> up(n, -1);
    std::size_t root = n;
    bool gap = true;
    for (std::size_t x = 0; x < n && gap; ++x) {
      if (!in(x)) continue;
      std::ptrdiff_t p = ft.parent[x];
      bool low = false;
      while (p >= 0 && !in(static_cast<std::size_t>(p))) {
        low = low || ft.label[p] < ft.label[x];
        p = ft.parent[p];
      }
      if (p >= 0 && low) gap = false;
      up[x] = p;
      if (p < 0) root = x;
    }
    if (!gap) continue;

    std::function<LabeledTree(std::size_t)> build = [&](std::size_t x) {
      LabeledTree node{ft.label[x], {}};
      for (std::size_t y = x + 1; y < n; ++y)
        if (in(y) && up[y] == static_cast<std::ptrdiff_t>(x)) node.children.push_back(build(y));
      return node;
    };
    LabeledTree image = build(root);
    found.insert(structured ? image : canonical(image));
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<LabeledTree> enumerate_labeled_trees(std::size_t max_nodes, std::uint32_t labels) {
  std::vector<std::vector<LabeledTree>> by_size(max_nodes + 1);
  // forests[m]: every ordered sequence of trees with m nodes in total.
  std::vector<std::vector<std::vector<LabeledTree>>> forests(max_nodes + 1);
  if (max_nodes >= 1) forests[0].push_back({});
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (std::uint32_t l = 0; l < labels; ++l)
      for (const auto& f : forests[n - 1]) by_size[n].push_back(LabeledTree{l, f});
    if (n == max_nodes) break;
    for (std::size_t k = 1; k <= n; ++k)
      for (const LabeledTree& first : by_size[k])
        for (const auto& rest : forests[n - k]) {
          std::vector<LabeledTree> f{first};
          f.insert(f.end(), rest.begin(), rest.end());
          forests[n].push_back(std::move(f));
        }
  }
  std::vector<LabeledTree> out;
  for (auto& v : by_size) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return out;
}

// ---------------------------------------------------------------------------
// The class of 0/1 trees and the isomorphism with T(B(_))

namespace {

bool t2bar_node(const LabeledTree& t) {
  if (t.label == 0 && t.children.size() > 1) return false;
  if (t.label == 1 && t.children.size() != 2) return false;
  if (t.label > 1) return false;
  for (const LabeledTree& c : t.children)
    if (!t2bar_node(c)) return false;
  return true;
}

const WExpr& btree_of_hole() {
  static const WExpr w = WExpr::btree(WExpr::hole());
  return w;
}

LabeledTree gap_of(TreeTerm t);

LabeledTree gap_of_body(const WElement& b) {
  if (b.kind == EKind::BNode) return LabeledTree{1, {gap_of_body(b.kids[0]), gap_of_body(b.kids[1])}};
  return gap_of(TreeTerm::from_id(static_cast<std::uint32_t>(b.kids[0].value)));
}

LabeledTree gap_of(TreeTerm t) {
  if (t.is_circ()) return LabeledTree{0, {}};
  return LabeledTree{0, {gap_of_body(t.body())}};
}

WElement body_of_gap(const LabeledTree& t) {
  if (t.label == 1) return WElement::node(body_of_gap(t.children[0]), body_of_gap(t.children[1]));
  return WElement::leaf(hole(from_gap(t)));
}

}  // namespace

bool in_t2bar(const LabeledTree& t) { return t.label == 0 && t2bar_node(t); }

LabeledTree to_gap(TreeTerm t) {
  check_term(btree_of_hole(), t);
  return gap_of(t);
}

TreeTerm from_gap(const LabeledTree& t) {
  if (!in_t2bar(t)) throw DomainError("tree " + to_string(t) + " is outside the 0/1 class");
  if (t.children.empty()) return TreeTerm();
  return TreeTerm::apply(body_of_gap(t.children[0]));
}

}  // namespace thetawpo

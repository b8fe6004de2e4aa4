#include "thetawpo/wpo.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "thetawpo/errors.hpp"
#include "wpo_text.hpp"

namespace thetawpo {

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset::FinitePoset(std::size_t n) : n_(n), leq_(n * n, false) {
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
}

FinitePoset FinitePoset::generated(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  FinitePoset p(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw DomainError("poset element out of range");
    p.leq_[a * n + b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) throw DomainError("relation is not antisymmetric");
  return p;
}

FinitePoset FinitePoset::from_matrix(const std::vector<std::vector<bool>>& leq) {
  std::size_t n = leq.size();
  FinitePoset p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw DomainError("order matrix is not square");
    for (std::size_t j = 0; j < n; ++j) p.leq_[i * n + j] = leq[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq(i, i)) throw DomainError("order is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i)) throw DomainError("order is not antisymmetric");
      for (std::size_t k = 0; k < n; ++k)
        if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k)) throw DomainError("order is not transitive");
    }
  }
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  FinitePoset p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) p.leq_[i * n + j] = true;
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n_ && covered; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

std::vector<FinitePoset> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<FinitePoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) m[slots[k].first][slots[k].second] = true;
    try {
      out.push_back(FinitePoset::from_matrix(m));
    } catch (const DomainError&) {
    }
  }
  return out;
}

std::string to_string(const FinitePoset& p) {
  std::string s = "P{" + std::to_string(p.size()) + ";";
  bool first = true;
  for (auto [a, b] : p.covering_pairs()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(a) + "<" + std::to_string(b);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// WExpr

struct WExpr::Node {
  WKind kind;
  std::vector<WExpr> ops;
  FinitePoset poset;
};

WExpr WExpr::hole() {
  static const WExpr h(std::make_shared<const Node>(Node{WKind::Hole, {}, FinitePoset()}));
  return h;
}
WExpr WExpr::constant(FinitePoset p) { return WExpr(std::make_shared<const Node>(Node{WKind::Const, {}, std::move(p)})); }
WExpr WExpr::sum(WExpr a, WExpr b) {
  return WExpr(std::make_shared<const Node>(Node{WKind::Sum, {std::move(a), std::move(b)}, FinitePoset()}));
}
WExpr WExpr::prod(WExpr a, WExpr b) {
  return WExpr(std::make_shared<const Node>(Node{WKind::Prod, {std::move(a), std::move(b)}, FinitePoset()}));
}
WExpr WExpr::star(WExpr a) { return WExpr(std::make_shared<const Node>(Node{WKind::Star, {std::move(a)}, FinitePoset()})); }
WExpr WExpr::btree(WExpr a) { return WExpr(std::make_shared<const Node>(Node{WKind::BTree, {std::move(a)}, FinitePoset()})); }

WKind WExpr::kind() const { return node_->kind; }
const WExpr& WExpr::left() const {
  if (node_->ops.empty()) throw ShapeError("expression has no operand");
  return node_->ops[0];
}
const WExpr& WExpr::right() const {
  if (node_->ops.size() < 2) throw ShapeError("expression has no right operand");
  return node_->ops[1];
}
const FinitePoset& WExpr::poset() const { return node_->poset; }

bool operator==(const WExpr& a, const WExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->ops == b.node_->ops && a.node_->poset == b.node_->poset;
}

namespace {

// Precedence: 0 sum, 1 product, 2 postfix star, 3 atom.
void print_w(const WExpr& w, int ctx, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    if (ctx > level) out += '(';
    body();
    if (ctx > level) out += ')';
  };
  switch (w.kind()) {
    case WKind::Hole: out += '_'; return;
    case WKind::Const: out += to_string(w.poset()); return;
    case WKind::Sum:
      wrap(0, [&] {
        print_w(w.left(), 0, out);
        out += '+';
        print_w(w.right(), 1, out);
      });
      return;
    case WKind::Prod:
      wrap(1, [&] {
        print_w(w.left(), 1, out);
        out += 'x';
        print_w(w.right(), 2, out);
      });
      return;
    case WKind::Star:
      wrap(2, [&] {
        print_w(w.left(), 2, out);
        out += '*';
      });
      return;
    case WKind::BTree:
      out += "B(";
      print_w(w.left(), 0, out);
      out += ')';
      return;
  }
}

class WParser {
 public:
  explicit WParser(std::string_view s) : c_(s) {}

  WExpr run() {
    WExpr w = sum();
    c_.finish();
    return w;
  }

 private:
  WExpr sum() {
    WExpr w = prod();
    while (c_.eat("+")) w = WExpr::sum(w, prod());
    return w;
  }
  WExpr prod() {
    WExpr w = post();
    while (c_.eat("x")) w = WExpr::prod(w, post());
    return w;
  }
  WExpr post() {
    WExpr w = atom();
    while (c_.eat("*")) w = WExpr::star(w);
    return w;
  }
  WExpr atom() {
    if (c_.eat("_")) return WExpr::hole();
    if (c_.eat("B(")) {
      WExpr w = sum();
      c_.expect(")");
      return WExpr::btree(w);
    }
    if (c_.eat("P{")) {
      std::size_t at = c_.pos();
      std::uint64_t n = c_.number();
      if (n > 64) c_.fail("poset constants are limited to 64 elements");
      c_.expect(";");
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      if (!c_.eat("}")) {
        do {
          std::size_t a = c_.number();
          c_.expect("<");
          std::size_t b = c_.number();
          pairs.emplace_back(a, b);
        } while (c_.eat(","));
        c_.expect("}");
      }
      try {
        return WExpr::constant(FinitePoset::generated(n, pairs));
      } catch (const DomainError& e) {
        throw ParseError(at, e.what());
      }
    }
    if (c_.eat("(")) {
      WExpr w = sum();
      c_.expect(")");
      return w;
    }
    c_.fail("expected a constructor expression");
  }

  detail::Cursor c_;
};

}  // namespace

std::string to_string(const WExpr& w) {
  std::string out;
  print_w(w, 0, out);
  return out;
}

WExpr parse_wexpr(std::string_view text) { return WParser(text).run(); }

// ---------------------------------------------------------------------------
// Elements

void check_shape(const WExpr& w, const WElement& a) {
  auto bad = [&](const char* what) { throw ShapeError(std::string(what) + " where " + to_string(w) + " was expected"); };
  switch (w.kind()) {
    case WKind::Hole:
      if (a.kind != EKind::Hole) bad("non-hole element");
      return;
    case WKind::Const:
      if (a.kind != EKind::Const) bad("non-constant element");
      if (a.value >= w.poset().size()) bad("constant index out of range");
      return;
    case WKind::Sum:
      if (a.kind != EKind::Sum || a.kids.size() != 1 || a.value > 1) bad("non-sum element");
      check_shape(a.value == 0 ? w.left() : w.right(), a.kids[0]);
      return;
    case WKind::Prod:
      if (a.kind != EKind::Pair || a.kids.size() != 2) bad("non-pair element");
      check_shape(w.left(), a.kids[0]);
      check_shape(w.right(), a.kids[1]);
      return;
    case WKind::Star:
      if (a.kind != EKind::List) bad("non-list element");
      for (const WElement& x : a.kids) check_shape(w.left(), x);
      return;
    case WKind::BTree:
      if (a.kind == EKind::BLeaf && a.kids.size() == 1) {
        check_shape(w.left(), a.kids[0]);
      } else if (a.kind == EKind::BNode && a.kids.size() == 2) {
        check_shape(w, a.kids[0]);
        check_shape(w, a.kids[1]);
      } else {
        bad("non-tree element");
      }
      return;
  }
}

namespace {

void collect_holes(const WElement& a, std::vector<std::uint64_t>& out) {
  if (a.kind == EKind::Hole) out.push_back(a.value);
  for (const WElement& k : a.kids) collect_holes(k, out);
}

WElement refill(const WElement& a, std::span<const std::uint64_t> values, std::size_t& i) {
  if (a.kind == EKind::Hole) {
    if (i >= values.size()) throw ShapeError("too few values for the holes of the naked term");
    return WElement::hole(values[i++]);
  }
  WElement out{a.kind, a.value, {}};
  out.kids.reserve(a.kids.size());
  for (const WElement& k : a.kids) out.kids.push_back(refill(k, values, i));
  return out;
}

}  // namespace

std::vector<std::uint64_t> hole_values(const WElement& a) {
  std::vector<std::uint64_t> out;
  collect_holes(a, out);
  return out;
}

std::pair<WElement, std::vector<std::uint64_t>> naked_term(const WElement& a) {
  auto values = hole_values(a);
  std::vector<std::uint64_t> zeros(values.size(), 0);
  std::size_t i = 0;
  return {refill(a, zeros, i), std::move(values)};
}

WElement substitute(const WElement& naked, std::span<const std::uint64_t> values) {
  std::size_t i = 0;
  WElement out = refill(naked, values, i);
  if (i != values.size()) throw ShapeError("too many values for the holes of the naked term");
  return out;
}

WElement map_holes(const WElement& a, const std::function<std::uint64_t(std::uint64_t)>& f) {
  if (a.kind == EKind::Hole) return WElement::hole(f(a.value));
  WElement out{a.kind, a.value, {}};
  out.kids.reserve(a.kids.size());
  for (const WElement& k : a.kids) out.kids.push_back(map_holes(k, f));
  return out;
}

std::size_t element_size(const WElement& a, const std::function<std::size_t(std::uint64_t)>& carrier_size) {
  switch (a.kind) {
    case EKind::Hole: return carrier_size(a.value);
    case EKind::Const: return 1;
    case EKind::Sum:
    case EKind::BLeaf: return element_size(a.kids[0], carrier_size);
    case EKind::Pair:
    case EKind::List:
    case EKind::BNode: {
      std::size_t n = 1;
      for (const WElement& k : a.kids) n += element_size(k, carrier_size);
      return n;
    }
  }
  return 0;
}

namespace {

class ElementEnumerator {
 public:
  explicit ElementEnumerator(const std::vector<std::vector<std::uint64_t>>& carrier) : carrier_(carrier) {}

  const std::vector<WElement>& of(const WExpr& w, std::size_t n) {
    auto key = std::make_pair(w.key(), n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<WElement> out = build(w, n);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<WElement> build(const WExpr& w, std::size_t n) {
    std::vector<WElement> out;
    if (n == 0) return out;
    switch (w.kind()) {
      case WKind::Hole:
        if (n < carrier_.size())
          for (std::uint64_t v : carrier_[n]) out.push_back(WElement::hole(v));
        break;
      case WKind::Const:
        if (n == 1)
          for (std::size_t i = 0; i < w.poset().size(); ++i) out.push_back(WElement::constant(i));
        break;
      case WKind::Sum:
        for (const WElement& x : of(w.left(), n)) out.push_back(WElement::inl(x));
        for (const WElement& x : of(w.right(), n)) out.push_back(WElement::inr(x));
        break;
      case WKind::Prod:
        for (std::size_t a = 1; a + 1 < n; ++a)
          for (const WElement& x : of(w.left(), a))
            for (const WElement& y : of(w.right(), n - 1 - a)) out.push_back(WElement::pair(x, y));
        break;
      case WKind::Star:
        for (auto& items : sequences(w.left(), n - 1)) out.push_back(WElement::list(items));
        break;
      case WKind::BTree:
        for (const WElement& x : of(w.left(), n)) out.push_back(WElement::leaf(x));
        for (std::size_t a = 1; a + 1 < n; ++a)
          for (const WElement& l : of(w, a))
            for (const WElement& r : of(w, n - 1 - a)) out.push_back(WElement::node(l, r));
        break;
    }
    return out;
  }

  /// Lists of elements whose sizes add up to exactly m.
  std::vector<std::vector<WElement>> sequences(const WExpr& item, std::size_t m) {
    if (m == 0) return {{}};
    std::vector<std::vector<WElement>> out;
    for (std::size_t a = 1; a <= m; ++a) {
      const auto& heads = of(item, a);
      if (heads.empty()) continue;
      auto tails = sequences(item, m - a);
      for (const WElement& h : heads)
        for (const auto& t : tails) {
          std::vector<WElement> s;
          s.reserve(t.size() + 1);
          s.push_back(h);
          s.insert(s.end(), t.begin(), t.end());
          out.push_back(std::move(s));
        }
    }
    return out;
  }

  const std::vector<std::vector<std::uint64_t>>& carrier_;
  std::map<std::pair<const void*, std::size_t>, std::vector<WElement>> memo_;
};

}  // namespace

std::vector<WElement> enumerate_elements(const WExpr& w, std::size_t size,
                                         const std::vector<std::vector<std::uint64_t>>& carrier_by_size) {
  ElementEnumerator e(carrier_by_size);
  return e.of(w, size);
}

// ---------------------------------------------------------------------------
// Orders

bool higman_leq_exhaustive(std::span<const std::size_t> xs, std::span<const std::size_t> ys, const FinitePoset& p) {
  // Walk all strictly increasing maps {0..n-1} -> {0..m-1} in lexicographic order.
  std::size_t n = xs.size(), m = ys.size();
  if (n == 0) return true;
  if (n > m) return false;
  std::vector<std::size_t> idx(n);
  for (std::size_t j = 0; j < n; ++j) idx[j] = j;
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = p.leq(xs[j], ys[idx[j]]);
    if (ok) return true;
    std::size_t j = n;
    while (j > 0 && idx[j - 1] == m - n + (j - 1)) --j;
    if (j == 0) return false;
    ++idx[j - 1];
    for (std::size_t k = j; k < n; ++k) idx[k] = idx[k - 1] + 1;
  }
}

namespace {

using LeafLeq = std::function<bool(const WElement&, const WElement&)>;

bool is_leaf(const WElement& b) { return b.kind == EKind::BLeaf; }

class BTreeEmbed {
 public:
  explicit BTreeEmbed(const LeafLeq& leaf) : leaf_(leaf) {}

  bool operator()(const WElement& s, const WElement& t) {
    auto key = std::make_pair(&s, &t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = decide(s, t);
    memo_.emplace(key, r);
    return r;
  }

 private:
  bool decide(const WElement& s, const WElement& t) {
    if (is_leaf(t)) return is_leaf(s) && leaf_(s.kids[0], t.kids[0]);
    if ((*this)(s, t.kids[0]) || (*this)(s, t.kids[1])) return true;
    return !is_leaf(s) && (*this)(s.kids[0], t.kids[0]) && (*this)(s.kids[1], t.kids[1]);
  }

  struct PairHash {
    std::size_t operator()(const std::pair<const WElement*, const WElement*>& p) const noexcept {
      return std::hash<const void*>{}(p.first) * 31 + std::hash<const void*>{}(p.second);
    }
  };

  const LeafLeq& leaf_;
  std::unordered_map<std::pair<const WElement*, const WElement*>, bool, PairHash> memo_;
};

bool leq_unchecked(const WExpr& w, const WElement& a, const WElement& b, const CarrierLeq& base) {
  switch (w.kind()) {
    case WKind::Hole: return base(a.value, b.value);
    case WKind::Const: return w.poset().leq(a.value, b.value);
    case WKind::Sum:
      return a.value == b.value && leq_unchecked(a.value == 0 ? w.left() : w.right(), a.kids[0], b.kids[0], base);
    case WKind::Prod:
      return leq_unchecked(w.left(), a.kids[0], b.kids[0], base) && leq_unchecked(w.right(), a.kids[1], b.kids[1], base);
    case WKind::Star:
      return higman_leq(std::span<const WElement>(a.kids), std::span<const WElement>(b.kids),
                        [&](const WElement& x, const WElement& y) { return leq_unchecked(w.left(), x, y, base); });
    case WKind::BTree: {
      LeafLeq leaf = [&](const WElement& x, const WElement& y) { return leq_unchecked(w.left(), x, y, base); };
      return BTreeEmbed(leaf)(a, b);
    }
  }
  return false;
}

}  // namespace

bool btree_embed(const WElement& s, const WElement& t, const LeafLeq& leaf_leq) { return BTreeEmbed(leaf_leq)(s, t); }

bool btree_embed_naive(const WElement& s, const WElement& t, const LeafLeq& leaf_leq) {
  if (is_leaf(t)) return is_leaf(s) && leaf_leq(s.kids[0], t.kids[0]);
  if (btree_embed_naive(s, t.kids[0], leaf_leq) || btree_embed_naive(s, t.kids[1], leaf_leq)) return true;
  return !is_leaf(s) && btree_embed_naive(s.kids[0], t.kids[0], leaf_leq) &&
         btree_embed_naive(s.kids[1], t.kids[1], leaf_leq);
}

bool w_leq(const WExpr& w, const WElement& a, const WElement& b, const CarrierLeq& base) {
  check_shape(w, a);
  check_shape(w, b);
  return leq_unchecked(w, a, b, base);
}

bool is_quasi_embedding(const FinitePoset& from, const FinitePoset& to, std::span<const std::size_t> q) {
  if (q.size() != from.size()) return false;
  for (std::size_t v : q)
    if (v >= to.size()) return false;
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = 0; b < from.size(); ++b)
      if (to.leq(q[a], q[b]) && !from.leq(a, b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Element text

namespace {

void print_e(const WExpr& w, const WElement& a, const HolePrinter& hole, std::string& out) {
  switch (w.kind()) {
    case WKind::Hole: out += hole(a.value); return;
    case WKind::Const: out += '#' + std::to_string(a.value); return;
    case WKind::Sum:
      out += a.value == 0 ? "inl " : "inr ";
      print_e(a.value == 0 ? w.left() : w.right(), a.kids[0], hole, out);
      return;
    case WKind::Prod:
      out += '(';
      print_e(w.left(), a.kids[0], hole, out);
      out += ", ";
      print_e(w.right(), a.kids[1], hole, out);
      out += ')';
      return;
    case WKind::Star:
      out += '[';
      for (std::size_t i = 0; i < a.kids.size(); ++i) {
        if (i) out += ", ";
        print_e(w.left(), a.kids[i], hole, out);
      }
      out += ']';
      return;
    case WKind::BTree:
      if (a.kind == EKind::BNode) {
        out += '(';
        print_e(w, a.kids[0], hole, out);
        out += ", ";
        print_e(w, a.kids[1], hole, out);
        out += ')';
      } else {
        if (w.left().kind() != WKind::Hole) out += "leaf ";
        print_e(w.left(), a.kids[0], hole, out);
      }
      return;
  }
}

}  // namespace

std::string to_string(const WExpr& w, const WElement& a, const HolePrinter& hole) {
  check_shape(w, a);
  std::string out;
  print_e(w, a, hole, out);
  return out;
}

namespace detail {

WElement parse_element(const WExpr& w, Cursor& c, const HoleReader& hole) {
  switch (w.kind()) {
    case WKind::Hole: {
      bool angle = c.eat("<");
      std::uint64_t v = hole(c);
      if (angle) c.expect(">");
      return WElement::hole(v);
    }
    case WKind::Const: {
      c.expect("#");
      std::size_t at = c.pos();
      std::uint64_t i = c.number();
      if (i >= w.poset().size()) throw ParseError(at, "constant index out of range");
      return WElement::constant(i);
    }
    case WKind::Sum:
      if (c.eat_word("inl")) return WElement::inl(parse_element(w.left(), c, hole));
      if (c.eat_word("inr")) return WElement::inr(parse_element(w.right(), c, hole));
      c.fail("expected 'inl' or 'inr'");
    case WKind::Prod: {
      c.expect("(");
      WElement x = parse_element(w.left(), c, hole);
      c.expect(",");
      WElement y = parse_element(w.right(), c, hole);
      c.expect(")");
      return WElement::pair(std::move(x), std::move(y));
    }
    case WKind::Star: {
      c.expect("[");
      std::vector<WElement> items;
      if (!c.eat("]")) {
        do items.push_back(parse_element(w.left(), c, hole));
        while (c.eat(","));
        c.expect("]");
      }
      return WElement::list(std::move(items));
    }
    case WKind::BTree: {
      if (c.eat_word("leaf")) return WElement::leaf(parse_element(w.left(), c, hole));
      std::size_t start = c.pos();
      if (c.eat("(")) {
        // A node `(l, r)` or `(l r)`; failing that, a leaf whose label starts with '('.
        try {
          WElement l = parse_element(w, c, hole);
          c.eat(",");
          WElement r = parse_element(w, c, hole);
          c.expect(")");
          return WElement::node(std::move(l), std::move(r));
        } catch (const ParseError&) {
          c.reset(start);
        }
      }
      return WElement::leaf(parse_element(w.left(), c, hole));
    }
  }
  c.fail("unknown expression");
}

}  // namespace detail

WElement parse_welement(const WExpr& w, std::string_view text) {
  detail::Cursor c(text);
  WElement e = detail::parse_element(w, c, [](detail::Cursor& cur) { return cur.number(); });
  c.finish();
  return e;
}

}  // namespace thetawpo

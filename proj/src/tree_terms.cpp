#include "thetawpo/tree_terms.hpp"

#include <deque>
#include <mutex>

#include "thetawpo/errors.hpp"
#include "wpo_text.hpp"

namespace thetawpo {

namespace {

struct ElementHash {
  std::size_t operator()(const WElement& e) const noexcept {
    std::size_t h = static_cast<std::size_t>(e.kind) * 0x9e3779b97f4a7c15ULL ^ e.value;
    for (const WElement& k : e.kids) h = (h ^ (*this)(k)) * 0x100000001b3ULL + (h >> 31);
    return h;
  }
};

struct TermNode {
  WElement body;
  std::size_t size;
  std::vector<std::uint32_t> kids;
};

class TermPool {
 public:
  TermPool() { nodes_.push_back(TermNode{WElement{}, 1, {}}); }

  std::uint32_t intern(WElement body) {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(body); it != table_.end()) return it->second;
    TermNode n{body, 1, hole_values_u32(body)};
    for (std::uint32_t k : n.kids)
      if (k >= nodes_.size()) throw DomainError("tree term id " + std::to_string(k) + " does not exist");
    n.size = 1 + element_size(body, [this](std::uint64_t id) { return nodes_[id].size; });
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(std::move(n));
    table_.emplace(std::move(body), id);
    return id;
  }

  const TermNode& at(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    if (id >= nodes_.size()) throw DomainError("tree term id " + std::to_string(id) + " does not exist");
    return nodes_[id];
  }

 private:
  static std::vector<std::uint32_t> hole_values_u32(const WElement& body) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t v : hole_values(body)) {
      if (v > UINT32_MAX) throw DomainError("tree term id out of range");
      out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
  }

  std::mutex mutex_;
  std::deque<TermNode> nodes_;  // stable addresses
  std::unordered_map<WElement, std::uint32_t, ElementHash> table_;
};

TermPool& pool() {
  static TermPool p;
  return p;
}

}  // namespace

TreeTerm::TreeTerm() = default;

TreeTerm TreeTerm::apply(WElement body) { return TreeTerm(pool().intern(std::move(body))); }

TreeTerm TreeTerm::from_id(std::uint32_t id) {
  pool().at(id);
  return TreeTerm(id);
}

const WElement& TreeTerm::body() const {
  if (is_circ()) throw DomainError("the circle has no components");
  return pool().at(id_).body;
}

std::vector<TreeTerm> TreeTerm::children() const {
  std::vector<TreeTerm> out;
  if (is_circ()) return out;
  for (std::uint32_t k : pool().at(id_).kids) out.push_back(TreeTerm(k));
  return out;
}

std::size_t TreeTerm::size() const { return pool().at(id_).size; }

WElement components(TreeTerm t) { return t.body(); }

void check_term(const WExpr& w, TreeTerm t) {
  if (t.is_circ()) return;
  check_shape(w, t.body());
  for (TreeTerm c : t.children()) check_term(w, c);
}

// ---------------------------------------------------------------------------
// Order

void TreeOrder::ensure_checked(TreeTerm t) {
  if (t.is_circ() || checked_.count(t.id())) return;
  check_shape(w_, t.body());
  for (TreeTerm c : t.children()) ensure_checked(c);
  checked_.insert(t.id());
}

bool TreeOrder::leq(TreeTerm s, TreeTerm t) {
  ensure_checked(s);
  ensure_checked(t);
  return decide(s, t);
}

bool TreeOrder::decide(TreeTerm s, TreeTerm t) {
  if (s.is_circ() || s == t) return true;
  if (t.is_circ()) return false;
  std::uint64_t key = (std::uint64_t{s.id()} << 32) | t.id();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool r = false;
  for (TreeTerm c : t.children())
    if (decide(s, c)) {
      r = true;
      break;
    }
  if (!r) {
    CarrierLeq base = [this](std::uint64_t a, std::uint64_t b) {
      return decide(TreeTerm::from_id(static_cast<std::uint32_t>(a)), TreeTerm::from_id(static_cast<std::uint32_t>(b)));
    };
    r = w_leq(w_, s.body(), t.body(), base);
  }
  memo_.emplace(key, r);
  return r;
}

bool t_leq(TreeTerm s, TreeTerm t, const WExpr& w) { return TreeOrder(w).leq(s, t); }

// ---------------------------------------------------------------------------
// Enumeration and the fixpoint oracle

std::vector<TreeTerm> enumerate_trees(const WExpr& w, std::size_t size_bound) {
  std::vector<TreeTerm> out;
  if (size_bound == 0) return out;
  out.push_back(TreeTerm());
  std::vector<std::vector<std::uint64_t>> by_size(2);
  by_size[1].push_back(0);
  for (std::size_t n = 2; n <= size_bound; ++n) {
    by_size.emplace_back();
    for (const WElement& e : enumerate_elements(w, n - 1, by_size)) {
      TreeTerm t = TreeTerm::apply(e);
      by_size[n].push_back(t.id());
      out.push_back(t);
    }
  }
  return out;
}

std::vector<std::vector<bool>> closure_oracle(const std::vector<TreeTerm>& universe, const WExpr& w) {
  std::size_t n = universe.size();
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(universe[i].id(), i);

  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!universe[i].is_circ()) check_shape(w, universe[i].body());
    for (TreeTerm c : universe[i].children()) {
      auto it = index.find(c.id());
      if (it == index.end()) throw DomainError("universe is not closed under taking children");
      kids[i].push_back(it->second);
    }
  }

  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = true;
    if (universe[i].is_circ())
      for (std::size_t j = 0; j < n; ++j) r[i][j] = true;
  }

  CarrierLeq base = [&](std::uint64_t a, std::uint64_t b) {
    return bool(r[index.at(static_cast<std::uint32_t>(a))][index.at(static_cast<std::uint32_t>(b))]);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i][j]) continue;
        bool add = false;
        for (std::size_t c : kids[j])
          if (r[i][c]) {
            add = true;
            break;
          }
        if (!add && !universe[i].is_circ() && !universe[j].is_circ())
          add = w_leq(w, universe[i].body(), universe[j].body(), base);
        if (!add)
          for (std::size_t k = 0; k < n && !add; ++k) add = r[i][k] && r[k][j];
        if (add) {
          r[i][j] = true;
          changed = true;
        }
      }
  }
  return r;
}

std::vector<TreeTerm> left_set_bounded(TreeTerm t, const WExpr& w, std::size_t size_bound) {
  TreeOrder order(w);
  std::vector<TreeTerm> out;
  for (TreeTerm s : enumerate_trees(w, size_bound))
    if (!order.leq(t, s)) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// The case analysis for W = (_*)*.
//
// With t = o[(t^1), ..., (t^k)] and s = o[(s^1), ..., (s^l)] (each t^i, s^j a
// sequence), s lies in L(t) iff every s^j_r does and for some q in 1..k there
// are outer positions l_1 < ... < l_{q-1} such that t^p is Higman-below s^{l_p}
// for p < q, while t^p is not Higman-below any s^j strictly between l_{p-1} and
// l_p (with l_0 = 0 and l_q = l + 1). The same pattern one level down decides
// "t^i is not Higman-below s^j" from memberships s^j_r in L(t^i_p).

namespace {

class XStarStar {
 public:
  bool in_left(TreeTerm x, TreeTerm y) {
    if (y.is_circ()) return false;
    if (x.is_circ()) return true;
    std::uint64_t key = (std::uint64_t{x.id()} << 32) | y.id();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = cases(y, x);
    memo_.emplace(key, r);
    return r;
  }

  bool cases(TreeTerm t, TreeTerm s) {
    auto ts = sequences(t), ss = sequences(s);
    for (const auto& seq : ss)
      for (TreeTerm x : seq)
        if (!in_left(x, t)) return false;
    for (std::size_t q = 1; q <= ts.size(); ++q) {
      std::vector<std::size_t> pos;
      if (outer_case(ts, ss, q, pos)) return true;
    }
    return false;
  }

 private:
  using Seq = std::vector<TreeTerm>;

  static std::vector<Seq> sequences(TreeTerm t) {
    std::vector<Seq> out;
    for (const WElement& inner : t.body().kids) {
      Seq seq;
      for (const WElement& h : inner.kids) seq.push_back(TreeTerm::from_id(static_cast<std::uint32_t>(h.value)));
      out.push_back(std::move(seq));
    }
    return out;
  }

  /// Chooses positions l_1 < ... < l_{q-1} (1-based in `pos`) and checks case q.
  bool outer_case(const std::vector<Seq>& ts, const std::vector<Seq>& ss, std::size_t q, std::vector<std::size_t>& pos) {
    if (pos.size() + 1 == q) {
      std::size_t lo = 0;
      for (std::size_t p = 1; p <= q; ++p) {
        std::size_t hi = p < q ? pos[p - 1] : ss.size() + 1;
        for (std::size_t i = lo + 1; i < hi; ++i)
          if (!not_star(ts[p - 1], ss[i - 1])) return false;
        if (p < q && not_star(ts[p - 1], ss[hi - 1])) return false;
        lo = hi;
      }
      return true;
    }
    std::size_t from = pos.empty() ? 1 : pos.back() + 1;
    for (std::size_t l = from; l <= ss.size(); ++l) {
      pos.push_back(l);
      bool ok = outer_case(ts, ss, q, pos);
      pos.pop_back();
      if (ok) return true;
    }
    return false;
  }

  /// (t_1, ..., t_n) is not Higman-below (s_1, ..., s_m).
  bool not_star(const Seq& t, const Seq& s) {
    for (std::size_t q = 1; q <= t.size(); ++q) {
      std::vector<std::size_t> pos;
      if (inner_case(t, s, q, pos)) return true;
    }
    return false;
  }

  bool inner_case(const Seq& t, const Seq& s, std::size_t q, std::vector<std::size_t>& pos) {
    if (pos.size() + 1 == q) {
      std::size_t lo = 0;
      for (std::size_t p = 1; p <= q; ++p) {
        std::size_t hi = p < q ? pos[p - 1] : s.size() + 1;
        for (std::size_t r = lo + 1; r < hi; ++r)
          if (!in_left(s[r - 1], t[p - 1])) return false;
        if (p < q && in_left(s[hi - 1], t[p - 1])) return false;
        lo = hi;
      }
      return true;
    }
    std::size_t from = pos.empty() ? 1 : pos.back() + 1;
    for (std::size_t r = from; r <= s.size(); ++r) {
      pos.push_back(r);
      bool ok = inner_case(t, s, q, pos);
      pos.pop_back();
      if (ok) return true;
    }
    return false;
  }

  std::unordered_map<std::uint64_t, bool> memo_;
};

const WExpr& xstarstar() {
  static const WExpr w = WExpr::star(WExpr::star(WExpr::hole()));
  return w;
}

}  // namespace

bool xstarstar_membership_cases(TreeTerm t, TreeTerm s) {
  if (t.is_circ() || s.is_circ()) throw DomainError("the case analysis needs two terms other than the circle");
  check_term(xstarstar(), t);
  check_term(xstarstar(), s);
  return XStarStar().cases(t, s);
}

// ---------------------------------------------------------------------------
// Text

namespace {

TreeTerm read_term(detail::Cursor& c, const WExpr& w) {
  if (!c.eat_word("o")) c.fail("expected 'o'");
  if (!c.eat("[")) return TreeTerm();
  WElement body = detail::parse_element(w, c, [&w](detail::Cursor& cur) { return std::uint64_t{read_term(cur, w).id()}; });
  c.expect("]");
  return TreeTerm::apply(std::move(body));
}

}  // namespace

std::string to_string(TreeTerm t, const WExpr& w) {
  if (t.is_circ()) return "o";
  HolePrinter hole = [&w](std::uint64_t id) { return to_string(TreeTerm::from_id(static_cast<std::uint32_t>(id)), w); };
  return "o[" + to_string(w, t.body(), hole) + "]";
}

TreeTerm parse_tree_term(std::string_view text, const WExpr& w) {
  detail::Cursor c(text);
  TreeTerm t = read_term(c, w);
  c.finish();
  return t;
}

namespace {

class DotWriter {
 public:
  DotWriter(std::string& out, WExpr root) : root_(std::move(root)), out_(out) {}

  std::size_t term(TreeTerm t, const WExpr& w) {
    std::size_t id = node("o", "circle");
    if (!t.is_circ()) edge(id, element(w, t.body()));
    return id;
  }

 private:
  std::size_t element(const WExpr& w, const WElement& a) {
    switch (w.kind()) {
      case WKind::Hole: return term(TreeTerm::from_id(static_cast<std::uint32_t>(a.value)), root_);
      case WKind::Const: return node("#" + std::to_string(a.value), "box");
      case WKind::Sum: {
        std::size_t id = node(a.value == 0 ? "inl" : "inr", "box");
        edge(id, element(a.value == 0 ? w.left() : w.right(), a.kids[0]));
        return id;
      }
      case WKind::Prod: {
        std::size_t id = node("x", "box");
        edge(id, element(w.left(), a.kids[0]));
        edge(id, element(w.right(), a.kids[1]));
        return id;
      }
      case WKind::Star: {
        std::size_t id = node("[]", "box");
        for (const WElement& k : a.kids) edge(id, element(w.left(), k));
        return id;
      }
      case WKind::BTree:
        if (a.kind == EKind::BLeaf) return element(w.left(), a.kids[0]);
        std::size_t id = node("", "point");
        edge(id, element(w, a.kids[0]));
        edge(id, element(w, a.kids[1]));
        return id;
    }
    throw InternalError("unknown expression kind");
  }

  std::size_t node(const std::string& label, const char* shape) {
    std::size_t id = next_++;
    out_ += "  n" + std::to_string(id) + " [label=\"" + label + "\", shape=" + shape + "];\n";
    return id;
  }

  void edge(std::size_t a, std::size_t b) { out_ += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n"; }

  WExpr root_;
  std::string& out_;
  std::size_t next_ = 0;
};

}  // namespace

std::string to_dot(TreeTerm t, const WExpr& w, std::string_view name) {
  check_term(w, t);
  std::string out = "digraph " + std::string(name) + " {\n";
  DotWriter(out, w).term(t, w);
  out += "}\n";
  return out;
}

}  // namespace thetawpo

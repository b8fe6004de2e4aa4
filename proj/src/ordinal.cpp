#include "thetawpo/ordinal.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "thetawpo/errors.hpp"
#include "thetawpo/ordinal_ops.hpp"
#include "thetawpo/ordinal_text.hpp"

namespace thetawpo {

namespace detail {

struct Node {
  Node(Kind k, std::uint32_t i, std::vector<Ordinal> ks, std::vector<Monomial> ms)
      : kind(k), id(i), kids(std::move(ks)), monos(std::move(ms)) {
    size = 1;
    for (Ordinal c : kids) size += c.size();
    for (const Monomial& m : monos) size += m.exponent.size() + m.coefficient.size();
  }

  Kind kind;
  std::uint32_t id;
  std::size_t size = 1;
  std::vector<Ordinal> kids;
  std::vector<Monomial> monos;

  // Lazily filled caches of pure functions of the node.
  mutable std::atomic<const Node*> max_coeff{nullptr};
  mutable std::atomic<const Node*> log_cache[2] = {nullptr, nullptr};
  mutable std::atomic<int> g_cache[2] = {-1, -1};
};

namespace {

struct Key {
  Kind kind;
  std::vector<std::uint32_t> ids;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ULL;
    for (std::uint32_t id : k.ids) h = (h ^ id) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

class Pool {
 public:
  Pool() { zero_ = &nodes_.emplace_back(Kind::Zero, 0, std::vector<Ordinal>{}, std::vector<Monomial>{}); }

  const Node* zero() const { return zero_; }

  const Node* intern(Kind kind, std::vector<Ordinal> kids, std::vector<Monomial> monos) {
    Key key{kind, {}};
    key.ids.reserve(kids.size() + 2 * monos.size());
    for (Ordinal k : kids) key.ids.push_back(k.id());
    for (const Monomial& m : monos) {
      key.ids.push_back(m.exponent.id());
      key.ids.push_back(m.coefficient.id());
    }
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(nodes_.size());
    const Node* n = &nodes_.emplace_back(kind, id, std::move(kids), std::move(monos));
    table_.emplace(std::move(key), n);
    return n;
  }

 private:
  std::mutex mutex_;
  std::deque<Node> nodes_;
  std::unordered_map<Key, const Node*, KeyHash> table_;
  const Node* zero_;
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------

Ordinal::Ordinal() : node_(detail::pool().zero()) {}

Ordinal Ordinal::theta(Ordinal arg) { return Ordinal(detail::pool().intern(Kind::Theta, {arg}, {})); }
Ordinal Ordinal::omega_pow(Ordinal e) { return Ordinal(detail::pool().intern(Kind::OmegaPow, {e}, {})); }
Ordinal Ordinal::theta_part(Ordinal arg) { return Ordinal(detail::pool().intern(Kind::ThetaPart, {arg}, {})); }
Ordinal Ordinal::raw_sum(std::vector<Ordinal> parts) {
  return Ordinal(detail::pool().intern(Kind::Sum, std::move(parts), {}));
}
Ordinal Ordinal::raw_cnf(std::vector<Monomial> monos) {
  return Ordinal(detail::pool().intern(Kind::Cnf, {}, std::move(monos)));
}

Kind Ordinal::kind() const { return node_->kind; }
Ordinal Ordinal::arg() const {
  if (node_->kind != Kind::Theta && node_->kind != Kind::OmegaPow && node_->kind != Kind::ThetaPart)
    throw DomainError("arg() on a term without an argument");
  return node_->kids.front();
}
std::span<const Ordinal> Ordinal::parts() const {
  if (node_->kind != Kind::Sum) return {};
  return node_->kids;
}
std::span<const Monomial> Ordinal::monomials() const { return node_->monos; }
std::size_t Ordinal::size() const { return node_->size; }
std::uint32_t Ordinal::id() const { return node_->id; }

std::string to_string(System sys) { return sys == System::Full ? "full" : "restricted"; }

std::string to_string(Ordering3 ord) {
  switch (ord) {
    case Ordering3::LT: return "LT";
    case Ordering3::EQ: return "EQ";
    case Ordering3::GT: return "GT";
  }
  return "?";
}

std::optional<System> parse_system(const std::string& name) {
  if (name == "full") return System::Full;
  if (name == "restricted") return System::Restricted;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

bool is_theta_like(Ordinal a) { return a.kind() == Kind::Theta || a.kind() == Kind::ThetaPart; }

bool is_unit_part(Ordinal p) {
  return (p.kind() == Kind::OmegaPow || p.kind() == Kind::ThetaPart) && p.arg().is_zero();
}

Ordinal unit_part(System sys) {
  return sys == System::Full ? Ordinal::omega_pow(Ordinal()) : Ordinal::theta_part(Ordinal());
}

/// Shape eps + n with eps an epsilon number and n finite (n = 0 allowed).
bool is_epsilon_plus_finite(Ordinal b) {
  if (is_epsilon(b)) return true;
  if (b.kind() != Kind::Sum || b.parts().empty() || !is_epsilon(b.parts().front())) return false;
  return std::all_of(b.parts().begin() + 1, b.parts().end(), is_unit_part);
}

}  // namespace

Ordinal natural(std::uint64_t n, System sys) {
  if (n == 0) return Ordinal();
  if (n == 1) return Ordinal::theta(Ordinal());
  return Ordinal::raw_sum(std::vector<Ordinal>(n, unit_part(sys)));
}

Ordinal big_omega() {
  Ordinal one = Ordinal::theta(Ordinal());
  return Ordinal::raw_cnf({Monomial{one, one}});
}

std::optional<std::uint64_t> natural_value(Ordinal a) {
  switch (a.kind()) {
    case Kind::Zero: return 0;
    case Kind::Theta:
      if (a.arg().is_zero()) return 1;
      return std::nullopt;
    case Kind::Sum:
      if (std::all_of(a.parts().begin(), a.parts().end(), is_unit_part)) return a.parts().size();
      return std::nullopt;
    default: return std::nullopt;
  }
}

bool is_natural(Ordinal a) { return natural_value(a).has_value(); }

bool is_countable(Ordinal a) { return a.kind() != Kind::Cnf; }

bool is_additively_closed(Ordinal a) {
  if (a.kind() == Kind::Theta) return true;
  if (a.kind() == Kind::Cnf && a.monomials().size() == 1)
    return a.monomials().front().coefficient.kind() == Kind::Theta;
  return false;
}

bool is_epsilon(Ordinal a) {
  if (is_theta_like(a)) return !is_countable(a.arg());
  if (a.kind() == Kind::OmegaPow) return a.arg().kind() == Kind::Theta && is_epsilon(a.arg());
  return false;
}

// ---------------------------------------------------------------------------
// Comparison.
//
// Countable terms are compared as non-increasing lists of principal parts;
// uncountable ones as lists of Omega-monomials. Two collapses are decided by
//   v(a) < v(b)  iff  (a < b and k(a) < v(b)) or (b < a and v(a) <= k(b)),
// and w^d against v(b) by comparing d with exponent_of_principal(v(b)).
// `fuel` bounds the recursion depth.

namespace {

Ordering3 cmp(Ordinal a, Ordinal b, int fuel);

Ordering3 flip(Ordering3 o) {
  return o == Ordering3::LT ? Ordering3::GT : o == Ordering3::GT ? Ordering3::LT : Ordering3::EQ;
}

Ordering3 cmp_theta(Ordinal pa, Ordinal pb, int fuel) {
  Ordinal a = pa.arg(), b = pb.arg();
  switch (cmp(a, b, fuel - 1)) {
    case Ordering3::EQ: return Ordering3::EQ;
    case Ordering3::LT:
      return cmp(max_coefficient(a), pb, fuel - 1) == Ordering3::LT ? Ordering3::LT : Ordering3::GT;
    case Ordering3::GT:
      return cmp(pa, max_coefficient(b), fuel - 1) != Ordering3::GT ? Ordering3::LT : Ordering3::GT;
  }
  throw InternalError("unreachable");
}

Ordering3 cmp_principal(Ordinal p, Ordinal q, int fuel) {
  if (p == q) return Ordering3::EQ;
  bool tp = is_theta_like(p), tq = is_theta_like(q);
  if (tp && tq) return cmp_theta(p, q, fuel);
  if (!tp && !tq) return cmp(p.arg(), q.arg(), fuel - 1);
  if (!tp) return cmp(p.arg(), exponent_of_principal(q), fuel - 1);
  return cmp(exponent_of_principal(p), q.arg(), fuel - 1);
}

Ordering3 cmp(Ordinal a, Ordinal b, int fuel) {
  if (a == b) return Ordering3::EQ;
  if (fuel <= 0) throw InternalError("comparison fuel exhausted on " + to_string(a) + " vs " + to_string(b));
  bool ca = is_countable(a), cb = is_countable(b);
  if (ca != cb) return ca ? Ordering3::LT : Ordering3::GT;

  if (!ca) {
    auto ma = a.monomials(), mb = b.monomials();
    for (std::size_t i = 0; i < ma.size() && i < mb.size(); ++i) {
      if (auto o = cmp(ma[i].exponent, mb[i].exponent, fuel - 1); o != Ordering3::EQ) return o;
      if (auto o = cmp(ma[i].coefficient, mb[i].coefficient, fuel - 1); o != Ordering3::EQ) return o;
    }
    return ma.size() < mb.size() ? Ordering3::LT : ma.size() > mb.size() ? Ordering3::GT : Ordering3::EQ;
  }

  auto principals = [](const Ordinal& x) -> std::span<const Ordinal> {
    if (x.is_zero()) return {};
    if (x.kind() == Kind::Sum) return x.parts();
    return {&x, 1};
  };
  auto pa = principals(a), pb = principals(b);
  for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i)
    if (auto o = cmp_principal(pa[i], pb[i], fuel); o != Ordering3::EQ) return o;
  return pa.size() < pb.size() ? Ordering3::LT : pa.size() > pb.size() ? Ordering3::GT : Ordering3::EQ;
}

int initial_fuel(Ordinal a, Ordinal b) { return static_cast<int>(4 * (a.size() + b.size())); }

}  // namespace

Ordering3 compare(Ordinal a, Ordinal b) { return cmp(a, b, initial_fuel(a, b)); }

Ordering3 compare_principal(Ordinal p, Ordinal q) {
  auto check = [](Ordinal x) {
    if (!x.is_principal_part() && x.kind() != Kind::Theta)
      throw DomainError("compare_principal expects a principal part, got " + to_string(x));
  };
  check(p);
  check(q);
  return cmp_principal(p, q, initial_fuel(p, q));
}

Ordinal exponent_of_principal(Ordinal p, System sys) {
  if (p.kind() == Kind::OmegaPow) return p.arg();
  if (!is_theta_like(p)) throw DomainError("exponent_of_principal expects a principal part");
  auto& slot = p.node()->log_cache[sys == System::Full ? 0 : 1];
  if (const detail::Node* cached = slot.load(std::memory_order_acquire)) return Ordinal::from_node(cached);

  Ordinal b = p.arg();
  Ordinal result;
  if (!is_countable(b))
    result = Ordinal::theta(b);  // an epsilon number: w^e = e
  else if (is_epsilon_plus_finite(b))
    result = natural_sum(b, natural(1, sys), sys);
  else
    result = b;
  slot.store(result.node(), std::memory_order_release);
  return result;
}

Ordinal theta_of_exponent(Ordinal e, System sys) {
  if (e.kind() == Kind::Theta && is_epsilon(e)) return e;
  if (e.kind() == Kind::Sum && is_epsilon_plus_finite(e)) {
    // e = eps + m with m >= 1: w^e = v(eps + (m - 1)).
    auto parts = e.parts();
    if (parts.size() == 2) {
      Ordinal head = parts.front();
      Ordinal eps = head.kind() == Kind::OmegaPow ? head.arg() : Ordinal::theta(head.arg());
      return Ordinal::theta(eps);
    }
    std::vector<Ordinal> shorter(parts.begin(), parts.end() - 1);
    return Ordinal::theta(Ordinal::raw_sum(std::move(shorter)));
  }
  (void)sys;
  return Ordinal::theta(e);
}

// ---------------------------------------------------------------------------

namespace {

void collect_coefficients(Ordinal a, std::vector<Ordinal>& out) {
  if (a.kind() != Kind::Cnf) {
    out.push_back(a);
    return;
  }
  for (const Monomial& m : a.monomials()) {
    out.push_back(m.coefficient);
    collect_coefficients(m.exponent, out);
  }
}

}  // namespace

std::vector<Ordinal> coefficient_set(Ordinal a) {
  std::vector<Ordinal> out;
  collect_coefficients(a, out);
  std::sort(out.begin(), out.end(), [](Ordinal x, Ordinal y) { return x.id() < y.id(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), less);
  return out;
}

Ordinal max_coefficient(Ordinal a) {
  if (a.kind() != Kind::Cnf) return a;
  if (const detail::Node* cached = a.node()->max_coeff.load(std::memory_order_acquire))
    return Ordinal::from_node(cached);
  Ordinal best;
  for (const Monomial& m : a.monomials()) {
    for (Ordinal c : {m.coefficient, max_coefficient(m.exponent)})
      if (compare(best, c) == Ordering3::LT) best = c;
  }
  a.node()->max_coeff.store(best.node(), std::memory_order_release);
  return best;
}

unsigned complexity(Ordinal a, System sys) {
  auto& slot = a.node()->g_cache[sys == System::Full ? 0 : 1];
  if (int cached = slot.load(std::memory_order_relaxed); cached >= 0) return static_cast<unsigned>(cached);

  unsigned g = 0;
  switch (a.kind()) {
    case Kind::Zero: g = 0; break;
    case Kind::Theta:
    case Kind::ThetaPart: g = complexity(a.arg(), sys) + 1; break;
    case Kind::OmegaPow: g = complexity(a.arg(), sys) + 1; break;
    case Kind::Sum: {
      unsigned m = 0;
      for (Ordinal p : a.parts()) {
        // A summand w^d contributes G(d); a summand v(b) is the term v(b).
        unsigned gp = p.kind() == Kind::OmegaPow ? complexity(p.arg(), sys) : complexity(p, sys);
        m = std::max(m, gp);
      }
      g = m + 1;
      break;
    }
    case Kind::Cnf: {
      unsigned m = 0;
      for (const Monomial& mono : a.monomials()) {
        m = std::max(m, complexity(mono.coefficient, sys));
        if (sys == System::Full) m = std::max(m, complexity(mono.exponent, sys));
      }
      g = m + 1;
      break;
    }
  }
  slot.store(static_cast<int>(g), std::memory_order_relaxed);
  return g;
}

// ---------------------------------------------------------------------------

namespace {

ValidationReport fail(std::string clause, const std::string& detail) {
  return ValidationReport{false, std::move(clause), detail};
}

}  // namespace

ValidationReport validate(Ordinal t, System sys) {
  switch (t.kind()) {
    case Kind::Zero: return {};

    case Kind::Theta: return validate(t.arg(), sys);

    case Kind::OmegaPow:
    case Kind::ThetaPart:
      return fail("summand", "principal part " + to_string(t) + " is only allowed inside a sum");

    case Kind::Sum: {
      auto parts = t.parts();
      for (Ordinal p : parts) {
        if (!p.is_principal_part()) return fail("sum-part", "summand " + to_string(p) + " is not a principal part");
        if (auto r = validate(p.arg(), sys); !r) return r;
      }
      if (parts.size() < 2) return fail("sum-length", "a countable sum needs m >= 2 summands: " + to_string(t));
      for (Ordinal p : parts) {
        if (sys == System::Full) {
          if (p.kind() != Kind::OmegaPow)
            return fail("sum-part", "full-system summands are w^d, got " + to_string(p));
          if (!is_countable(p.arg()))
            return fail("sum-exponent", "exponent of " + to_string(p) + " is not countable");
        } else if (p.kind() != Kind::ThetaPart) {
          return fail("sum-part", "restricted-system summands are v(b), got " + to_string(p));
        }
      }
      for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (compare_principal(parts[i], parts[i + 1]) == Ordering3::LT)
          return fail("sum-order", "summands increase in " + to_string(t));
      if (sys == System::Full && compare(t, parts.front().arg()) != Ordering3::GT)
        return fail("sum-bound", "sum does not exceed its first exponent: " + to_string(t));
      return {};
    }

    case Kind::Cnf: {
      auto monos = t.monomials();
      if (monos.empty()) return fail("cnf-empty", "Omega-normal form without monomials");
      for (const Monomial& m : monos) {
        if (auto r = validate(m.exponent, sys); !r) return r;
        if (auto r = validate(m.coefficient, sys); !r) return r;
        if (!is_countable(m.coefficient) || m.coefficient.is_zero())
          return fail("cnf-coefficient", "coefficient " + to_string(m.coefficient) + " must be countable and nonzero");
        if (sys == System::Restricted && !is_natural(m.exponent))
          return fail("cnf-exponent", "restricted-system exponent " + to_string(m.exponent) + " is not a natural");
      }
      for (std::size_t i = 0; i + 1 < monos.size(); ++i)
        if (compare(monos[i].exponent, monos[i + 1].exponent) != Ordering3::GT)
          return fail("cnf-order", "exponents must strictly decrease in " + to_string(t));
      if (monos.size() == 1 && monos.front().exponent.is_zero())
        return fail("cnf-degenerate", "Omega^0 * c is written as c");
      return {};
    }
  }
  return fail("kind", "unknown node");
}

}  // namespace thetawpo

#include "thetawpo/ordinal_ops.hpp"

#include <algorithm>

#include "thetawpo/errors.hpp"
#include "thetawpo/ordinal_text.hpp"

namespace thetawpo {

namespace {

/// Principal parts of a countable term, in the summand sort of `sys`.
std::vector<Ordinal> principal_parts(Ordinal x, System sys) {
  std::vector<Ordinal> raw;
  if (x.is_zero()) return raw;
  if (x.kind() == Kind::Sum)
    raw.assign(x.parts().begin(), x.parts().end());
  else
    raw.push_back(x);

  std::vector<Ordinal> out;
  out.reserve(raw.size());
  for (Ordinal p : raw) {
    bool is_pow = p.kind() == Kind::OmegaPow;
    if (sys == System::Full)
      out.push_back(is_pow ? p : Ordinal::omega_pow(exponent_of_principal(p, sys)));
    else
      out.push_back(is_pow ? Ordinal::theta_part(theta_of_exponent(p.arg(), sys).arg()) : Ordinal::theta_part(p.arg()));
  }
  return out;
}

Ordinal make_countable(std::vector<Ordinal> parts) {
  if (parts.empty()) return Ordinal();
  std::stable_sort(parts.begin(), parts.end(),
                   [](Ordinal p, Ordinal q) { return compare_principal(p, q) == Ordering3::GT; });
  if (parts.size() == 1) {
    Ordinal p = parts.front();
    return p.kind() == Kind::OmegaPow ? theta_of_exponent(p.arg()) : Ordinal::theta(p.arg());
  }
  return Ordinal::raw_sum(std::move(parts));
}

std::vector<Monomial> monomials_of(Ordinal x) {
  if (x.is_zero()) return {};
  if (is_countable(x)) return {Monomial{Ordinal(), x}};
  return {x.monomials().begin(), x.monomials().end()};
}

Ordinal make_cnf(std::vector<Monomial> monos, System sys) {
  std::stable_sort(monos.begin(), monos.end(), [](const Monomial& m, const Monomial& n) {
    return compare(m.exponent, n.exponent) == Ordering3::GT;
  });
  std::vector<Monomial> merged;
  for (const Monomial& m : monos) {
    if (!merged.empty() && merged.back().exponent == m.exponent)
      merged.back().coefficient = natural_sum(merged.back().coefficient, m.coefficient, sys);
    else
      merged.push_back(m);
  }
  if (merged.empty()) return Ordinal();
  if (merged.size() == 1 && merged.front().exponent.is_zero()) return merged.front().coefficient;
  return Ordinal::raw_cnf(std::move(merged));
}

}  // namespace

Ordinal natural_sum(Ordinal a, Ordinal b, System sys) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (is_countable(a) && is_countable(b)) {
    auto parts = principal_parts(a, sys);
    auto more = principal_parts(b, sys);
    parts.insert(parts.end(), more.begin(), more.end());
    return make_countable(std::move(parts));
  }
  auto monos = monomials_of(a);
  auto more = monomials_of(b);
  monos.insert(monos.end(), more.begin(), more.end());
  return make_cnf(std::move(monos), sys);
}

Ordinal natural_product(Ordinal a, Ordinal b, System sys) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  if (is_countable(a) && is_countable(b)) {
    // (sum w^x_i) (x) (sum w^y_j) = (+)_{i,j} w^(x_i (+) y_j)
    std::vector<Ordinal> parts;
    for (Ordinal p : principal_parts(a, sys)) {
      Ordinal x = exponent_of_principal(p, sys);
      for (Ordinal q : principal_parts(b, sys)) {
        Ordinal e = natural_sum(x, exponent_of_principal(q, sys), sys);
        parts.push_back(sys == System::Full ? Ordinal::omega_pow(e)
                                            : Ordinal::theta_part(theta_of_exponent(e, sys).arg()));
      }
    }
    return make_countable(std::move(parts));
  }
  // (Omega^e c) (x) (Omega^f d) = Omega^(e (+) f) (c (x) d)
  std::vector<Monomial> monos;
  for (const Monomial& m : monomials_of(a))
    for (const Monomial& n : monomials_of(b))
      monos.push_back(Monomial{natural_sum(m.exponent, n.exponent, sys),
                               natural_product(m.coefficient, n.coefficient, sys)});
  return make_cnf(std::move(monos), sys);
}

Ordinal omega_tower(unsigned n, Ordinal a, System sys) {
  Ordinal x = a;
  for (unsigned i = 0; i < n; ++i) {
    if (x.is_zero()) {
      x = natural(1, sys);
      continue;
    }
    if (sys == System::Restricted && !is_natural(x))
      throw RangeError("Omega^" + to_string(x) + " has a non-natural exponent in the restricted system");
    x = Ordinal::raw_cnf({Monomial{x, natural(1, sys)}});
  }
  return x;
}

// ---------------------------------------------------------------------------
// Enumeration by complexity level.

namespace {

bool desc(Ordinal a, Ordinal b) { return compare(a, b) == Ordering3::GT; }

/// Calls `emit` with every non-increasing index sequence of length `len` into
/// `pool` (indices non-decreasing, pool sorted descending). Strict when `strict`.
template <typename Emit>
void for_each_sequence(std::size_t pool, std::size_t len, bool strict, Emit&& emit) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (idx.size() == len) {
      emit(idx);
      return;
    }
    for (std::size_t i = from; i < pool; ++i) {
      idx.push_back(i);
      self(self, strict ? i + 1 : i);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

class Enumerator {
 public:
  Enumerator(System sys, const EnumBounds& b) : sys_(sys), b_(b) {}

  std::vector<Ordinal> run() {
    levels_.push_back({Ordinal()});
    for (unsigned g = 1; g <= b_.max_complexity; ++g) levels_.push_back(level(g));
    std::vector<Ordinal> out;
    for (const auto& lv : levels_)
      for (Ordinal t : lv)
        if (!b_.countable_only || is_countable(t)) out.push_back(t);
    return out;
  }

 private:
  std::vector<Ordinal> upto(unsigned g, bool countable, bool nonzero) const {
    std::vector<Ordinal> v;
    for (unsigned i = 0; i <= g && i < levels_.size(); ++i)
      for (Ordinal t : levels_[i])
        if ((!countable || is_countable(t)) && (!nonzero || !t.is_zero())) v.push_back(t);
    std::stable_sort(v.begin(), v.end(), desc);
    return v;
  }

  std::vector<Ordinal> level(unsigned g) {
    std::vector<Ordinal> out;
    for (Ordinal x : levels_[g - 1]) out.push_back(Ordinal::theta(x));
    if (sys_ == System::Full)
      full_sums(g, out);
    else
      restricted_sums(g, out);
    cnfs(g, out);
    return out;
  }

  void full_sums(unsigned g, std::vector<Ordinal>& out) {
    // w^d_1 + ... + w^d_m with G(d_i) <= g-1, one of them equal.
    auto exps = upto(g - 1, true, false);
    for (std::size_t m = 2; m <= b_.width; ++m)
      for_each_sequence(exps.size(), m, false, [&](const std::vector<std::size_t>& idx) {
        std::vector<Ordinal> parts;
        bool top = false;
        for (std::size_t i : idx) {
          parts.push_back(Ordinal::omega_pow(exps[i]));
          top = top || complexity(exps[i], sys_) == g - 1;
        }
        if (top) out.push_back(Ordinal::raw_sum(std::move(parts)));
      });
  }

  void restricted_sums(unsigned g, std::vector<Ordinal>& out) {
    // v(b_1) + ... + v(b_m) with G'(b_i) <= g-2, one of them equal.
    if (g < 2) return;
    auto args = upto(g - 2, false, false);
    std::vector<Ordinal> thetas;
    for (Ordinal b : args) thetas.push_back(Ordinal::theta(b));
    std::stable_sort(thetas.begin(), thetas.end(), desc);
    for (std::size_t m = 2; m <= b_.width; ++m)
      for_each_sequence(thetas.size(), m, false, [&](const std::vector<std::size_t>& idx) {
        std::vector<Ordinal> parts;
        bool top = false;
        for (std::size_t i : idx) {
          parts.push_back(Ordinal::theta_part(thetas[i].arg()));
          top = top || complexity(thetas[i].arg(), sys_) == g - 2;
        }
        if (top) out.push_back(Ordinal::raw_sum(std::move(parts)));
      });
  }

  void cnfs(unsigned g, std::vector<Ordinal>& out) {
    std::vector<Ordinal> exps;
    if (sys_ == System::Full) {
      exps = upto(g - 1, false, false);
    } else {
      for (unsigned n = b_.max_exponent + 1; n-- > 0;) exps.push_back(natural(n, sys_));
    }
    auto coeffs = upto(g - 1, true, true);
    if (coeffs.empty()) return;
    for (std::size_t m = 1; m <= b_.cnf_width; ++m)
      for_each_sequence(exps.size(), m, true, [&](const std::vector<std::size_t>& eidx) {
        if (m == 1 && exps[eidx[0]].is_zero()) return;
        unsigned exp_g = 0;
        if (sys_ == System::Full)
          for (std::size_t i : eidx) exp_g = std::max(exp_g, complexity(exps[i], sys_));
        // Every choice of coefficients, one per monomial.
        std::vector<std::size_t> cidx(m, 0);
        while (true) {
          unsigned gmax = exp_g;
          for (std::size_t c : cidx) gmax = std::max(gmax, complexity(coeffs[c], sys_));
          if (gmax == g - 1) {
            std::vector<Monomial> monos;
            for (std::size_t k = 0; k < m; ++k) monos.push_back(Monomial{exps[eidx[k]], coeffs[cidx[k]]});
            out.push_back(Ordinal::raw_cnf(std::move(monos)));
          }
          std::size_t k = 0;
          while (k < m && ++cidx[k] == coeffs.size()) cidx[k++] = 0;
          if (k == m) break;
        }
      });
  }

  System sys_;
  EnumBounds b_;
  std::vector<std::vector<Ordinal>> levels_;
};

}  // namespace

std::vector<Ordinal> enumerate_terms(System sys, const EnumBounds& bounds) {
  return Enumerator(sys, bounds).run();
}

// ---------------------------------------------------------------------------
// Random terms: build bottom-up through the canonicalising arithmetic, then
// reject candidates whose complexity overshoots (merging coefficients can
// raise it).

namespace {

class Sampler {
 public:
  Sampler(System sys, const EnumBounds& b, std::mt19937_64& rng) : sys_(sys), b_(b), rng_(rng) {}

  Ordinal any(unsigned g) {
    if (g == 0) return Ordinal();
    if (b_.countable_only || g < 2 || coin()) return countable(g, false);
    for (int attempt = 0; attempt < 64; ++attempt)
      if (Ordinal t = cnf(g); complexity(t, sys_) <= g) return t;
    return countable(g, false);
  }

  Ordinal countable(unsigned g, bool nonzero) {
    if (g == 0) return Ordinal();
    for (int attempt = 0; attempt < 64; ++attempt) {
      Ordinal t;
      switch (pick(8)) {
        case 0: t = nonzero ? natural(1, sys_) : Ordinal(); break;
        case 1:
        case 2:
        case 3: t = Ordinal::theta(any(g - 1)); break;
        default: t = sum(g); break;
      }
      if (complexity(t, sys_) <= g && (!nonzero || !t.is_zero())) return t;
    }
    return natural(1, sys_);
  }

 private:
  bool coin() { return pick(2) == 0; }
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }

  Ordinal sum(unsigned g) {
    unsigned m = 2 + pick(std::max(1u, b_.width - 1));
    Ordinal acc;
    for (unsigned i = 0; i < m; ++i) {
      Ordinal part;
      if (sys_ == System::Full)
        part = theta_of_exponent(countable(g - 1, false));
      else
        part = g >= 2 ? Ordinal::theta(any(g - 2)) : natural(1, sys_);
      acc = natural_sum(acc, part, sys_);
    }
    return acc;
  }

  Ordinal cnf(unsigned g) {
    unsigned m = 1 + pick(std::max(1u, b_.cnf_width));
    Ordinal acc;
    for (unsigned i = 0; i < m; ++i) {
      Ordinal e = sys_ == System::Full ? any(g - 1) : natural(1 + pick(std::max(1u, b_.max_exponent)), sys_);
      if (e.is_zero()) e = natural(1, sys_);
      Ordinal c = countable(g - 1, true);
      acc = natural_sum(acc, Ordinal::raw_cnf({Monomial{e, c}}), sys_);
    }
    return acc;
  }

  System sys_;
  const EnumBounds& b_;
  std::mt19937_64& rng_;
};

}  // namespace

Ordinal random_term(System sys, const EnumBounds& bounds, std::mt19937_64& rng) {
  return Sampler(sys, bounds, rng).any(bounds.max_complexity);
}

// ---------------------------------------------------------------------------
// Coding: Cantor pairing on lists, four tags on terms.

namespace {

Code pair(const Code& x, const Code& y) {
  Code s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Code, Code> unpair(const Code& z) {
  Code disc = 8 * z + 1;
  Code w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  Code t = w * (w + 1) / 2;
  Code y = z - t;
  return {w - y, y};
}

template <typename Range, typename F>
Code encode_list(const Range& items, F&& code_of) {
  Code acc = 0;
  for (auto it = std::rbegin(items); it != std::rend(items); ++it) acc = 1 + pair(code_of(*it), acc);
  return acc;
}

std::vector<Code> decode_list(Code c) {
  std::vector<Code> out;
  while (c != 0) {
    auto [head, rest] = unpair(c - 1);
    out.push_back(head);
    c = rest;
  }
  return out;
}

Ordinal decode_raw(const Code& n) {
  if (n == 0) return Ordinal();
  Code q = n / 4;
  int tag = static_cast<int>(n % 4);
  switch (tag) {
    case 1: return Ordinal::theta(decode_raw(q));
    case 2: {
      std::vector<Ordinal> parts;
      for (const Code& pc : decode_list(q)) {
        Ordinal arg = decode_raw(pc / 2);
        parts.push_back(pc % 2 == 0 ? Ordinal::omega_pow(arg) : Ordinal::theta_part(arg));
      }
      return Ordinal::raw_sum(std::move(parts));
    }
    case 3: {
      std::vector<Monomial> monos;
      for (const Code& mc : decode_list(q)) {
        auto [e, c] = unpair(mc);
        monos.push_back(Monomial{decode_raw(e), decode_raw(c)});
      }
      return Ordinal::raw_cnf(std::move(monos));
    }
    default: throw DomainError("not a term code: " + n.str());
  }
}

}  // namespace

Code encode(Ordinal t) {
  switch (t.kind()) {
    case Kind::Zero: return 0;
    case Kind::Theta: return 4 * encode(t.arg()) + 1;
    case Kind::Sum:
      return 4 * encode_list(t.parts(), [](Ordinal p) {
               Code c = 2 * encode(p.arg());
               return p.kind() == Kind::ThetaPart ? Code(c + 1) : c;
             }) + 2;
    case Kind::Cnf:
      return 4 * encode_list(t.monomials(), [](const Monomial& m) { return pair(encode(m.exponent), encode(m.coefficient)); }) + 3;
    case Kind::OmegaPow:
    case Kind::ThetaPart: break;
  }
  throw DomainError("a principal part alone has no code: " + to_string(t));
}

Ordinal decode(const Code& n, System sys) {
  if (n < 0) throw DomainError("negative code");
  Ordinal t = decode_raw(n);
  if (auto r = validate(t, sys); !r) throw DomainError("code " + n.str() + " is not a valid term: " + r.detail);
  return t;
}

}  // namespace thetawpo

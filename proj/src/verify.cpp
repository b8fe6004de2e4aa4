#include "thetawpo/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>

#include "thetawpo/collapse_map.hpp"
#include "thetawpo/errors.hpp"
#include "thetawpo/gap_trees.hpp"
#include "thetawpo/ordinal_ops.hpp"
#include "thetawpo/ordinal_text.hpp"
#include "thetawpo/tree_terms.hpp"
#include "thetawpo/wpo.hpp"

namespace thetawpo {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Shared helpers

std::vector<System> systems_of(const SuiteParams& p) {
  if (p.system) return {*p.system};
  return {System::Full, System::Restricted};
}

/// The exhaustive universes used by the ordinal suites. Full terms at G <= 4
/// only stay enumerable with a single Omega-monomial per Cnf.
EnumBounds universe_bounds(System sys, unsigned g, bool wide_cnf = true) {
  if (sys == System::Full) return EnumBounds{g, false, 2, wide_cnf ? 2u : 1u, 2};
  return EnumBounds{g, false, 3, 3, 2};
}

json bounds_json(const EnumBounds& b) {
  return json{{"max_complexity", b.max_complexity}, {"width", b.width}, {"cnf_width", b.cnf_width}, {"max_exponent", b.max_exponent}};
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(stream)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

Ordering3 flip(Ordering3 o) {
  if (o == Ordering3::LT) return Ordering3::GT;
  if (o == Ordering3::GT) return Ordering3::LT;
  return o;
}

std::string show(Ordinal a) { return to_string(a); }
std::string show(bool b) { return b ? "true" : "false"; }

void record(SuiteReport& r, Failure f) {
  if (r.failures.size() < SuiteReport::kMaxFailures) r.failures.push_back(std::move(f));
}

std::size_t size_of(Ordinal a) { return a.size(); }
std::size_t size_of(TreeTerm t) { return t.size(); }
std::size_t size_of(const LabeledTree& t) { return t.size(); }

std::vector<Ordinal> kids_of(Ordinal a) {
  std::vector<Ordinal> out;
  switch (a.kind()) {
    case Kind::Theta: out.push_back(a.arg()); break;
    case Kind::Sum:
      for (Ordinal p : a.parts()) out.push_back(p.arg());
      break;
    case Kind::Cnf:
      for (const Monomial& m : a.monomials()) {
        out.push_back(m.exponent);
        out.push_back(m.coefficient);
      }
      break;
    default: break;
  }
  return out;
}

std::vector<TreeTerm> kids_of(TreeTerm t) { return t.children(); }
std::vector<LabeledTree> kids_of(const LabeledTree& t) { return t.children; }

template <typename F, typename... A>
bool still_fails(F& fails, const A&... a) {
  try {
    return fails(a...);
  } catch (const std::exception&) {
    return false;
  }
}

/// Greedy shrinking: replace x by its largest immediate part that still fails, until none does.
template <typename T, typename Fails>
T shrink(T x, Fails fails) {
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<T> cands = kids_of(x);
    std::stable_sort(cands.begin(), cands.end(), [](const T& a, const T& b) { return size_of(a) > size_of(b); });
    for (const T& c : cands)
      if (still_fails(fails, c)) {
        x = c;
        progress = true;
        break;
      }
  }
  return x;
}

template <typename T, typename Fails>
std::pair<T, T> shrink_pair(T a, T b, Fails fails) {
  for (bool progress = true; progress;) {
    T a2 = shrink(a, [&](const T& x) { return fails(x, b); });
    T b2 = shrink(b, [&](const T& y) { return fails(a2, y); });
    progress = !(a2 == a && b2 == b);
    a = std::move(a2);
    b = std::move(b2);
  }
  return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// order-axioms

SuiteReport order_axioms(const SuiteParams& p) {
  SuiteReport r{"order-axioms", {}, 0, {}};
  unsigned g = static_cast<unsigned>(p.size.value_or(3));
  r.params["size"] = g;
  auto broken = [](Ordinal a, Ordinal b) {
    Ordering3 x = compare(a, b), y = compare(b, a);
    return (a == b) != (x == Ordering3::EQ) || x != flip(y);
  };
  for (System sys : systems_of(p)) {
    EnumBounds bounds = universe_bounds(sys, g);
    r.params[to_string(sys)] = bounds_json(bounds);
    std::vector<Ordinal> terms = enumerate_terms(sys, bounds);
    // Once sorted, compare must put every earlier term strictly below every
    // later one in both argument orders; this is trichotomy, antisymmetry and
    // transitivity on all triples at once.
    std::stable_sort(terms.begin(), terms.end(), less);
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = i; j < terms.size(); ++j) {
        Ordinal a = terms[i], b = terms[j];
        Ordering3 x = compare(a, b), y = compare(b, a);
        Ordering3 want = i == j ? Ordering3::EQ : Ordering3::LT;
        ++r.checked;
        if (x == want && y == flip(want)) continue;
        if (broken(a, b)) std::tie(a, b) = shrink_pair(a, b, broken);
        record(r, {{to_string(sys), show(a), show(b)},
                   to_string(a == b ? Ordering3::EQ : want) + " / " + to_string(flip(a == b ? Ordering3::EQ : want)),
                   to_string(compare(a, b)) + " / " + to_string(compare(b, a))});
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// theta-criterion

bool theta_rule_holds(Ordinal ta, Ordinal tb) {
  Ordinal a = ta.arg(), b = tb.arg();
  bool lhs = less(ta, tb);
  bool rhs = (less(a, b) && less(max_coefficient(a), tb)) || (less(b, a) && compare(ta, max_coefficient(b)) != Ordering3::GT);
  return lhs == rhs;
}

SuiteReport theta_criterion(const SuiteParams& p) {
  SuiteReport r{"theta-criterion", {}, 0, {}};
  unsigned g = static_cast<unsigned>(p.size.value_or(3));
  std::size_t samples = p.samples.value_or(100000);
  r.params["size"] = g;
  r.params["samples"] = samples;
  r.params["seed"] = p.seed;
  auto rule_fails = [](Ordinal x, Ordinal y) {
    return x.kind() == Kind::Theta && y.kind() == Kind::Theta && !theta_rule_holds(x, y);
  };
  auto theta_pair_fails = [&](Ordinal a, Ordinal b) { return rule_fails(Ordinal::theta(a), Ordinal::theta(b)); };
  auto report_rule = [&](System sys, Ordinal ta, Ordinal tb) {
    auto [a, b] = shrink_pair(ta.arg(), tb.arg(), theta_pair_fails);
    Ordinal x = Ordinal::theta(a), y = Ordinal::theta(b);
    record(r, {{to_string(sys), show(x), show(y)}, "v(a) < v(b) iff the collapsing criterion", "v(a) < v(b) is " + show(less(x, y))});
  };
  for (System sys : systems_of(p)) {
    EnumBounds bounds = universe_bounds(sys, g);
    r.params[to_string(sys)] = bounds_json(bounds);
    std::vector<Ordinal> terms = enumerate_terms(sys, bounds);
    std::vector<Ordinal> thetas;
    for (Ordinal t : terms)
      if (t.kind() == Kind::Theta) thetas.push_back(t);
    for (Ordinal ta : thetas)
      for (Ordinal tb : thetas) {
        ++r.checked;
        if (!theta_rule_holds(ta, tb)) report_rule(sys, ta, tb);
      }
    for (Ordinal b : terms) {
      ++r.checked;
      if (!less(max_coefficient(b), Ordinal::theta(b))) {
        auto dominated = [](Ordinal x) { return !less(max_coefficient(x), Ordinal::theta(x)); };
        Ordinal s = shrink(b, dominated);
        record(r, {{to_string(sys), show(s)}, "k(b) < v(b)", "k(b) = " + show(max_coefficient(s))});
      }
    }
    std::mt19937_64 rng(stream_seed(p.seed, static_cast<std::uint64_t>(sys)));
    std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      Ordinal ta = Ordinal::theta(terms[pick(rng)]);
      Ordinal tb = Ordinal::theta(terms[pick(rng)]);
      ++r.checked;
      if (!theta_rule_holds(ta, tb)) report_rule(sys, ta, tb);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// coeff-lemmas

struct CoeffCheck {
  const char* claim;
  std::function<std::pair<Ordinal, Ordinal>(Ordinal, Ordinal, System)> sides;
  bool needs_nonzero_b = false;
};

const std::vector<CoeffCheck>& coeff_checks() {
  static const std::vector<CoeffCheck> checks = {
      {"k(a+b) <= k(a)+k(b)",
       [](Ordinal a, Ordinal b, System s) {
         return std::pair{max_coefficient(natural_sum(a, b, s)), natural_sum(max_coefficient(a), max_coefficient(b), s)};
       }},
      {"k(a*b) <= max(k(a)+k(b), k(a)*k(b)*w)",
       [](Ordinal a, Ordinal b, System s) {
         Ordinal ka = max_coefficient(a), kb = max_coefficient(b);
         Ordinal omega = Ordinal::theta(Ordinal::theta(Ordinal::zero()));
         Ordinal x = natural_sum(ka, kb, s), y = natural_product(natural_product(ka, kb, s), omega, s);
         return std::pair{max_coefficient(natural_product(a, b, s)), less(x, y) ? y : x};
       }},
      {"k(a) <= k(a+b)",
       [](Ordinal a, Ordinal b, System s) { return std::pair{max_coefficient(a), max_coefficient(natural_sum(a, b, s))}; }},
      {"k(b) <= k(a+b)",
       [](Ordinal a, Ordinal b, System s) { return std::pair{max_coefficient(b), max_coefficient(natural_sum(a, b, s))}; }},
      {"k(a) <= k(a*b) for b > 0",
       [](Ordinal a, Ordinal b, System s) { return std::pair{max_coefficient(a), max_coefficient(natural_product(a, b, s))}; },
       true},
  };
  return checks;
}

SuiteReport coeff_lemmas(const SuiteParams& p) {
  SuiteReport r{"coeff-lemmas", {}, 0, {}};
  unsigned g = static_cast<unsigned>(p.size.value_or(5));
  std::size_t samples = p.samples.value_or(10000);
  r.params["size"] = g;
  r.params["samples"] = samples;
  r.params["seed"] = p.seed;
  for (System sys : systems_of(p)) {
    EnumBounds bounds{g, false, 2, 2, 2};
    std::mt19937_64 rng(stream_seed(p.seed, 16 + static_cast<std::uint64_t>(sys)));
    std::size_t done = 0, attempts = 0;
    while (done < samples && attempts < 20 * samples) {
      ++attempts;
      Ordinal a = random_term(sys, bounds, rng), b = random_term(sys, bounds, rng);
      std::vector<std::pair<Ordinal, Ordinal>> sides;
      try {
        for (const CoeffCheck& c : coeff_checks()) sides.push_back(c.sides(a, b, sys));
      } catch (const RangeError&) {
        continue;
      }
      ++done;
      ++r.checked;
      for (std::size_t i = 0; i < sides.size(); ++i) {
        const CoeffCheck& c = coeff_checks()[i];
        if (c.needs_nonzero_b && b.is_zero()) continue;
        if (compare(sides[i].first, sides[i].second) != Ordering3::GT) continue;
        auto fails = [&](Ordinal x, Ordinal y) {
          if (c.needs_nonzero_b && y.is_zero()) return false;
          auto [l, h] = c.sides(x, y, sys);
          return compare(l, h) == Ordering3::GT;
        };
        auto [x, y] = shrink_pair(a, b, fails);
        auto [l, h] = c.sides(x, y, sys);
        record(r, {{to_string(sys), show(x), show(y)}, c.claim, show(l) + " > " + show(h)});
      }
    }
    if (done < samples)
      record(r, {{to_string(sys)}, std::to_string(samples) + " representable pairs", std::to_string(done) + " found"});
  }
  return r;
}

// ---------------------------------------------------------------------------
// g-monotone and encode-monotone

SuiteReport g_monotone(const SuiteParams& p) {
  SuiteReport r{"g-monotone", {}, 0, {}};
  unsigned g = static_cast<unsigned>(p.size.value_or(4));
  r.params["size"] = g;
  for (System sys : systems_of(p)) {
    EnumBounds bounds = universe_bounds(sys, g, false);
    r.params[to_string(sys)] = bounds_json(bounds);
    auto fails = [sys](Ordinal x) { return complexity(max_coefficient(x), sys) > complexity(x, sys); };
    for (Ordinal t : enumerate_terms(sys, bounds)) {
      ++r.checked;
      if (!fails(t)) continue;
      Ordinal s = shrink(t, fails);
      record(r, {{to_string(sys), show(s)},
                 "G(k(x)) <= G(x) = " + std::to_string(complexity(s, sys)),
                 "G(k(x)) = " + std::to_string(complexity(max_coefficient(s), sys))});
    }
  }
  return r;
}

SuiteReport encode_monotone(const SuiteParams& p) {
  SuiteReport r{"encode-monotone", {}, 0, {}};
  unsigned g = static_cast<unsigned>(p.size.value_or(4));
  r.params["size"] = g;
  for (System sys : systems_of(p)) {
    EnumBounds bounds = universe_bounds(sys, g, false);
    r.params[to_string(sys)] = bounds_json(bounds);
    for (Ordinal t : enumerate_terms(sys, bounds)) {
      ++r.checked;
      Code c = encode(t);
      for (Ordinal x : coefficient_set(t))
        if (encode(x) > c) record(r, {{to_string(sys), show(t), show(x)}, "code(x) <= code(t) for x in K(t)", "code(x) > code(t)"});
      for (Ordinal x : kids_of(t))
        if (encode(x) > c) record(r, {{to_string(sys), show(t), show(x)}, "code(x) <= code(t) for subterms x", "code(x) > code(t)"});
      Ordinal back = decode(c, sys);
      if (back != t) record(r, {{to_string(sys), show(t)}, "decode(encode(t)) = t", show(back)});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// higman-oracle

void all_sequences(std::size_t alphabet, std::size_t max_len, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  if (cur.size() == max_len) return;
  for (std::size_t a = 0; a < alphabet; ++a) {
    cur.push_back(a);
    all_sequences(alphabet, max_len, cur, out);
    cur.pop_back();
  }
}

std::string show_seq(const std::vector<std::size_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

SuiteReport higman_oracle(const SuiteParams& p) {
  SuiteReport r{"higman-oracle", {}, 0, {}};
  std::size_t len = p.size.value_or(5);
  r.params["size"] = len;
  r.params["poset_sizes"] = json::array({1, 2, 3});
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::vector<std::size_t>> seqs;
    std::vector<std::size_t> cur;
    all_sequences(n, len, cur, seqs);
    for (const FinitePoset& po : all_posets(n)) {
      auto leq = [&po](std::size_t a, std::size_t b) { return po.leq(a, b); };
      auto fails = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
        return higman_leq<std::size_t>(x, y, leq) != higman_leq_exhaustive(x, y, po);
      };
      for (const auto& xs : seqs)
        for (const auto& ys : seqs) {
          ++r.checked;
          if (!fails(xs, ys)) continue;
          std::vector<std::size_t> x = xs, y = ys;
          // Drop single positions while the disagreement persists.
          for (bool progress = true; progress;) {
            progress = false;
            for (auto* v : {&x, &y})
              for (std::size_t i = 0; i < v->size() && !progress; ++i) {
                auto w = *v;
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                if (v == &x ? fails(w, y) : fails(x, w)) {
                  *v = w;
                  progress = true;
                }
              }
          }
          record(r, {{to_string(po), show_seq(x), show_seq(y)}, show(higman_leq_exhaustive(x, y, po)),
                     show(higman_leq<std::size_t>(x, y, leq))});
        }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// tleq-fixpoint

SuiteReport tleq_fixpoint(const SuiteParams& p) {
  SuiteReport r{"tleq-fixpoint", {}, 0, {}};
  std::size_t size = p.size.value_or(5);
  const std::vector<std::pair<std::string, std::size_t>> shapes = {
      {"B(_)", size + 1}, {"_*", size}, {"_**", size}, {"_x_+P{2;0<1}", size}};
  json ws = json::object();
  for (const auto& [text, bound] : shapes) ws[text] = bound;
  r.params["universes"] = ws;
  for (const auto& [text, bound] : shapes) {
    WExpr w = parse_wexpr(text);
    std::vector<TreeTerm> u = enumerate_trees(w, bound);
    std::vector<std::vector<bool>> rel = closure_oracle(u, w);
    std::unordered_map<TreeTerm, std::size_t> index;
    for (std::size_t i = 0; i < u.size(); ++i) index.emplace(u[i], i);
    TreeOrder ord(w);
    auto fails = [&](TreeTerm s, TreeTerm t) { return rel[index.at(s)][index.at(t)] != ord.leq(s, t); };
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) {
        ++r.checked;
        bool got = ord.leq(u[i], u[j]);
        if (got != rel[i][j]) {
          auto [s, t] = shrink_pair(u[i], u[j], fails);
          record(r, {{text, to_string(s, w), to_string(t, w)}, show(bool(rel[index.at(s)][index.at(t)])), show(ord.leq(s, t))});
        }
        if (i != j && got && ord.leq(u[j], u[i]))
          record(r, {{text, to_string(u[i], w), to_string(u[j], w)}, "not both s <= t and t <= s", "both"});
      }
    for (TreeTerm t : u)
      for (TreeTerm c : t.children()) {
        ++r.checked;
        if (!ord.leq(c, t)) record(r, {{text, to_string(c, w), to_string(t, w)}, "child <= parent", "false"});
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// gap-oracle

SuiteReport gap_oracle(const SuiteParams& p) {
  SuiteReport r{"gap-oracle", {}, 0, {}};
  std::size_t size = p.size.value_or(7);
  std::size_t brute = std::min<std::size_t>(size, 5), loose = std::min<std::size_t>(size, 6);
  r.params["size"] = size;
  r.params["pairwise_brute_size"] = brute;
  r.params["unstructured_size"] = loose;

  auto report = [&](const LabeledTree& s, const LabeledTree& t, bool structured, bool expected) {
    auto fails = [structured](const LabeledTree& x, const LabeledTree& y) {
      return x.size() <= 10 && y.size() <= 10 && gap_leq(x, y, structured) != brute_gap_leq(x, y, structured);
    };
    LabeledTree x = s, y = t;
    if (fails(x, y)) {
      std::tie(x, y) = shrink_pair(x, y, fails);
      expected = brute_gap_leq(x, y, structured);
    }
    record(r, {{to_string(x), to_string(y), structured ? "structured" : "unstructured"}, show(expected),
               show(gap_leq(x, y, structured))});
  };

  // Against the image-set oracle: every tree up to `size` nodes as target.
  auto sweep = [&](std::size_t bound, bool structured) {
    std::vector<LabeledTree> all = enumerate_labeled_trees(bound, 2);
    TreeIndex index;
    std::vector<std::uint32_t> ids, keys;
    for (const LabeledTree& t : all) ids.push_back(index.intern(t));
    for (const LabeledTree& t : all) keys.push_back(structured ? index.intern(t) : index.intern(canonical(t)));
    std::vector<char> in(index.size());
    for (const LabeledTree& t : all) {
      std::fill(in.begin(), in.end(), 0);
      for (const LabeledTree& d : gap_downset(t, structured)) in[index.intern(d)] = 1;
      GapEmbedder emb(t, structured);
      for (std::size_t i = 0; i < all.size(); ++i) {
        ++r.checked;
        bool got = emb.embeds(index, ids[i]);
        if (got != bool(in[keys[i]])) report(all[i], t, structured, in[keys[i]]);
      }
    }
  };
  sweep(size, true);
  sweep(loose, false);

  std::vector<LabeledTree> small = enumerate_labeled_trees(brute, 2);
  for (bool structured : {true, false})
    for (const LabeledTree& s : small)
      for (const LabeledTree& t : small) {
        ++r.checked;
        bool want = brute_gap_leq(s, t, structured);
        if (gap_leq(s, t, structured) != want) report(s, t, structured, want);
      }
  return r;
}

// ---------------------------------------------------------------------------
// iso

const WExpr& btree_of_hole() {
  static const WExpr w = WExpr::btree(WExpr::hole());
  return w;
}

SuiteReport iso(const SuiteParams& p) {
  SuiteReport r{"iso", {}, 0, {}};
  std::size_t size = p.size.value_or(8);
  r.params["size"] = size;
  const WExpr& w = btree_of_hole();
  std::vector<TreeTerm> u = enumerate_trees(w, size);
  std::vector<LabeledTree> img;
  for (TreeTerm t : u) {
    LabeledTree g = to_gap(t);
    ++r.checked;
    if (!in_t2bar(g)) record(r, {{to_string(t, w)}, "image in the 0/1 class", to_string(g)});
    if (g.size() != t.size()) record(r, {{to_string(t, w)}, "image size " + std::to_string(t.size()), std::to_string(g.size())});
    TreeTerm back = from_gap(g);
    if (back != t) record(r, {{to_string(t, w)}, "from_gap(to_gap(t)) = t", to_string(back, w)});
    img.push_back(std::move(g));
  }
  TreeOrder ord(w);
  auto fails = [&](TreeTerm s, TreeTerm t) { return ord.leq(s, t) != gap_leq(to_gap(s), to_gap(t), true); };
  for (std::size_t i = 0; i < u.size(); ++i) {
    GapEmbedder emb(img[i], true);
    for (std::size_t j = 0; j < u.size(); ++j) {
      ++r.checked;
      bool want = ord.leq(u[j], u[i]);
      if (emb.embeds(img[j]) == want) continue;
      auto [s, t] = shrink_pair(u[j], u[i], fails);
      record(r, {{to_string(s, w), to_string(t, w)}, "s <= t is " + show(ord.leq(s, t)),
                 "g(s) <=gap g(t) is " + show(gap_leq(to_gap(s), to_gap(t), true))});
    }
  }
  // Surjectivity: every tree of the class up to `size` nodes comes back.
  for (const LabeledTree& t : enumerate_labeled_trees(size, 2)) {
    if (!in_t2bar(t)) continue;
    ++r.checked;
    LabeledTree back = to_gap(from_gap(t));
    if (back != t) record(r, {{to_string(t)}, "to_gap(from_gap(t)) = t", to_string(back)});
  }
  return r;
}

// ---------------------------------------------------------------------------
// quasi-embedding

SuiteReport quasi_embedding(const SuiteParams& p) {
  SuiteReport r{"quasi-embedding", {}, 0, {}};
  unsigned g = static_cast<unsigned>(p.size.value_or(3));
  std::size_t samples = p.samples.value_or(10000);
  constexpr unsigned kSampleComplexity = 6;
  EnumBounds bounds = universe_bounds(System::Full, g);
  r.params["size"] = g;
  r.params["samples"] = samples;
  r.params["sample_complexity"] = kSampleComplexity;
  r.params["seed"] = p.seed;
  r.params["full"] = bounds_json(bounds);
  const WExpr& w = btree_of_hole();
  TreeOrder ord(w);

  auto reflects = [&](Ordinal a, Ordinal b) {
    return !(is_countable(a) && is_countable(b) && ord.leq(ord_to_tree(a), ord_to_tree(b)) && compare(a, b) == Ordering3::GT);
  };
  auto check_pair = [&](Ordinal a, Ordinal b) {
    ++r.checked;
    if (reflects(a, b)) return;
    auto [x, y] = shrink_pair(a, b, [&](Ordinal s, Ordinal t) { return !reflects(s, t); });
    record(r, {{show(x), show(y)}, "g(a) <= g(b) implies a <= b", "g(a) <= g(b) with a > b"});
  };
  auto labels_match = [](Ordinal b) {
    std::vector<Ordinal> ks = coefficient_set(b);
    ks.push_back(Ordinal::zero());
    std::vector<TreeTerm> want;
    for (Ordinal k : ks) want.push_back(ord_to_tree(k));
    std::sort(want.begin(), want.end(), [](TreeTerm x, TreeTerm y) { return x.id() < y.id(); });
    want.erase(std::unique(want.begin(), want.end()), want.end());
    return leaf_labels(cnf_tree(b)) == want;
  };
  auto check_term = [&](Ordinal a) {
    ++r.checked;
    if (!labels_match(a)) {
      Ordinal s = shrink(a, [&](Ordinal x) { return !labels_match(x); });
      record(r, {{show(s)}, "leaf labels of f(b) = g(K(b) + {0})", "different label set"});
    }
    if (is_countable(a) && !in_t2bar(to_gap(ord_to_tree(a))))
      record(r, {{show(a)}, "to_gap(g(a)) in the 0/1 class", to_string(to_gap(ord_to_tree(a)))});
  };

  std::vector<Ordinal> all = enumerate_terms(System::Full, bounds);
  std::vector<Ordinal> countable;
  for (Ordinal a : all) {
    check_term(a);
    if (is_countable(a)) countable.push_back(a);
  }
  for (Ordinal a : countable)
    for (Ordinal b : countable) check_pair(a, b);

  std::mt19937_64 rng(stream_seed(p.seed, 32));
  EnumBounds sb{kSampleComplexity, true, 2, 2, 2};
  for (std::size_t i = 0; i < samples; ++i) {
    Ordinal a = random_term(System::Full, sb, rng), b = random_term(System::Full, sb, rng);
    check_pair(a, b);
    if (a.kind() == Kind::Theta) check_term(a.arg());
  }
  return r;
}

// ---------------------------------------------------------------------------
// xstarstar-cases

SuiteReport xstarstar_cases(const SuiteParams& p) {
  SuiteReport r{"xstarstar-cases", {}, 0, {}};
  std::size_t size = p.size.value_or(6);
  r.params["size"] = size;
  WExpr w = WExpr::star(WExpr::star(WExpr::hole()));
  TreeOrder ord(w);
  std::vector<TreeTerm> u = enumerate_trees(w, size);
  auto fails = [&](TreeTerm t, TreeTerm s) {
    return !t.is_circ() && !s.is_circ() && xstarstar_membership_cases(t, s) == ord.leq(t, s);
  };
  for (TreeTerm t : u)
    for (TreeTerm s : u) {
      if (t.is_circ() || s.is_circ()) continue;
      ++r.checked;
      if (!fails(t, s)) continue;
      auto [a, b] = shrink_pair(t, s, fails);
      record(r, {{to_string(a, w), to_string(b, w)}, "s in L(t) is " + show(!ord.leq(a, b)),
                 "case analysis gives " + show(xstarstar_membership_cases(a, b))});
    }
  return r;
}

// ---------------------------------------------------------------------------
// fixtures

SuiteReport fixtures(const SuiteParams&) {
  SuiteReport r{"fixtures", {}, 0, {}};
  const WExpr& w = btree_of_hole();
  auto expect = [&](const std::string& what, const std::string& want, const std::string& got) {
    ++r.checked;
    if (want != got) record(r, {{what}, want, got});
  };
  auto tree = [&](TreeTerm t) { return to_string(t, w); };
  auto element = [&](const WElement& e) {
    return to_string(w, e, [&](std::uint64_t id) { return tree(TreeTerm::from_id(static_cast<std::uint32_t>(id))); });
  };
  Ordinal zero = Ordinal::zero(), one = Ordinal::theta(zero);
  TreeTerm circ;

  expect("g(0)", "o", tree(ord_to_tree(zero)));
  expect("f(0)", element(WElement::leaf(hole(circ))), element(cnf_tree(zero)));
  expect("g(v(0))", "o[o]", tree(ord_to_tree(one)));
  expect("f(b) for 0 < b < O, b = 1", "((o, o[o]), o)", element(cnf_tree(one)));
  expect("f(b) for 0 < b < O, b = w", "((o, " + tree(ord_to_tree(parse_ordinal("v(v(0))", System::Full))) + "), o)",
         element(cnf_tree(parse_ordinal("v(v(0))", System::Full))));

  TreeTerm fig = parse_tree_term("o[(o, o[(o, o)])]", w);
  LabeledTree fig_gap = parse_labeled_tree("(0 (1 (0) (0 (1 (0) (0)))))");
  expect("g of the figure term", to_string(fig_gap), to_string(to_gap(fig)));
  expect("figure tree in the 0/1 class", "true", show(in_t2bar(fig_gap)));
  expect("from_gap of the figure tree", tree(fig), tree(from_gap(fig_gap)));
  expect("g(o) is one 0-node", "(0)", to_string(to_gap(circ)));
  expect("single 1-node outside the 0/1 class", "false", show(in_t2bar(parse_labeled_tree("(1)"))));
  expect("o below every term", "true", show(t_leq(circ, fig, w)));

  expect("K(0)", "0", show(coefficient_set(zero).front()));
  expect("|K(0)|", "1", std::to_string(coefficient_set(zero).size()));
  expect("G(0)", "0", std::to_string(complexity(zero, System::Full)));
  expect("Omega_0[a] = a", show(one), show(omega_tower(0, one)));
  expect("single-part sum rejected", "sum-length", validate(Ordinal::raw_sum({Ordinal::omega_pow(zero)}), System::Full).clause);
  expect("v(a) countable", "true", show(is_countable(Ordinal::theta(big_omega()))));
  return r;
}

using SuiteFn = SuiteReport (*)(const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"order-axioms", order_axioms},       {"theta-criterion", theta_criterion}, {"coeff-lemmas", coeff_lemmas},
      {"g-monotone", g_monotone},           {"encode-monotone", encode_monotone}, {"higman-oracle", higman_oracle},
      {"tleq-fixpoint", tleq_fixpoint},     {"gap-oracle", gap_oracle},           {"iso", iso},
      {"quasi-embedding", quasi_embedding}, {"xstarstar-cases", xstarstar_cases}, {"fixtures", fixtures},
  };
  return r;
}

bool failure_less(const Failure& a, const Failure& b) {
  return std::tie(a.inputs, a.expected, a.got) < std::tie(b.inputs, b.expected, b.got);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteParams& params) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      SuiteReport r = fn(params);
      if (r.params.is_null()) r.params = json::object();
      std::sort(r.failures.begin(), r.failures.end(), failure_less);
      r.failures.erase(std::unique(r.failures.begin(), r.failures.end(),
                                   [](const Failure& a, const Failure& b) { return !failure_less(a, b) && !failure_less(b, a); }),
                       r.failures.end());
      return r;
    }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

nlohmann::ordered_json to_json(const SuiteReport& r) {
  json fs = json::array();
  for (const Failure& f : r.failures) fs.push_back(json{{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  return json{{"suite", r.suite}, {"params", r.params}, {"checked", r.checked}, {"failures", fs}};
}

std::string to_text(const SuiteReport& r) {
  std::string out = r.suite + ": " + (r.passed() ? "ok" : "FAILED") + ", " + std::to_string(r.checked) + " checked, " +
                    std::to_string(r.failures.size()) + " failures " + r.params.dump() + "\n";
  for (const Failure& f : r.failures) {
    out += "  inputs:";
    for (const std::string& s : f.inputs) out += " " + s + ";";
    out += " expected " + f.expected + ", got " + f.got + "\n";
  }
  return out;
}

}  // namespace thetawpo

#include <doctest.h>

#include <vector>

#include "thetawpo/errors.hpp"
#include "thetawpo/wpo.hpp"

using namespace thetawpo;

namespace {

CarrierLeq equal_only() {
  return [](std::uint64_t a, std::uint64_t b) { return a == b; };
}

CarrierLeq numeric() {
  return [](std::uint64_t a, std::uint64_t b) { return a <= b; };
}

std::string plain(const WExpr& w, const WElement& a) {
  return to_string(w, a, [](std::uint64_t v) { return std::to_string(v); });
}

}  // namespace

TEST_CASE("finite posets") {
  FinitePoset d(3);
  CHECK(d.leq(1, 1));
  CHECK_FALSE(d.leq(0, 1));

  std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {1, 2}};
  FinitePoset c = FinitePoset::generated(3, pairs);
  CHECK(c == FinitePoset::chain(3));
  CHECK(c.leq(0, 2));
  CHECK(c.covering_pairs().size() == 2);
  CHECK(to_string(c) == "P{3;0<1,1<2}");

  std::vector<std::pair<std::size_t, std::size_t>> cyc{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(FinitePoset::generated(2, cyc), DomainError);
  std::vector<std::pair<std::size_t, std::size_t>> out_of_range{{0, 5}};
  CHECK_THROWS_AS(FinitePoset::generated(2, out_of_range), DomainError);
  CHECK_THROWS_AS(FinitePoset::from_matrix({{true, false}, {true, false}}), DomainError);

  CHECK(all_posets(1).size() == 1);
  CHECK(all_posets(2).size() == 3);
  CHECK(all_posets(3).size() == 19);
}

TEST_CASE("expression text") {
  for (const char* s : {"_", "B(_)", "_*", "_**", "_x_+P{1;}", "(_+_)x_", "B(_x_)*", "P{3;0<1,0<2}", "(_x_)*"}) {
    WExpr w = parse_wexpr(s);
    CHECK(to_string(w) == s);
    CHECK(parse_wexpr(to_string(w)) == w);
  }
  CHECK(parse_wexpr(" ( _ * ) * ") == WExpr::star(WExpr::star(WExpr::hole())));
  CHECK(parse_wexpr("_+_+_").left().kind() == WKind::Sum);
  CHECK_THROWS_AS(parse_wexpr("B(_"), ParseError);
  CHECK_THROWS_AS(parse_wexpr("P{2;0<1,1<0}"), ParseError);
  try {
    parse_wexpr("_x?");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("higman order") {
  auto eq = [](int a, int b) { return a == b; };
  std::vector<int> empty, ab{0, 1}, acb{0, 2, 1}, ba{1, 0};
  CHECK(higman_leq<int>(empty, ab, eq));
  CHECK(higman_leq<int>(ab, acb, eq));
  CHECK_FALSE(higman_leq<int>(ba, ab, eq));
  CHECK_FALSE(higman_leq<int>(ab, empty, eq));

  FinitePoset anti(2);
  std::vector<std::size_t> x{1, 0}, y{0, 1};
  CHECK_FALSE(higman_leq_exhaustive(x, y, anti));
  CHECK(higman_leq_exhaustive(y, y, anti));
}

TEST_CASE("binary tree embedding") {
  WExpr w = WExpr::btree(WExpr::hole());
  auto lf = [](std::uint64_t x) { return WElement::leaf(WElement::hole(x)); };
  auto same = [](const WElement& a, const WElement& b) { return a == b; };
  WElement x = lf(0), y = lf(1);
  WElement xx = WElement::node(x, x);
  WElement deep = WElement::node(x, xx);

  CHECK(btree_embed(x, x, same));
  CHECK(btree_embed(x, WElement::node(y, x), same));
  CHECK(btree_embed(xx, deep, same));
  CHECK_FALSE(btree_embed(deep, xx, same));
  CHECK_FALSE(btree_embed(WElement::node(y, x), WElement::node(x, y), same));
  CHECK(btree_embed_naive(xx, deep, same));
  CHECK_FALSE(btree_embed_naive(deep, xx, same));

  CHECK(w_leq(w, xx, deep, equal_only()));
  CHECK(plain(w, deep) == "(0, (0, 0))");
  CHECK(parse_welement(w, "(0 (0 0))") == deep);
  CHECK(parse_welement(w, "(<0>, (0, <0>))") == deep);
}

TEST_CASE("element orders") {
  WExpr sum = parse_wexpr("_+_");
  CHECK_FALSE(w_leq(sum, WElement::inl(WElement::hole(0)), WElement::inr(WElement::hole(5)), numeric()));
  CHECK(w_leq(sum, WElement::inr(WElement::hole(2)), WElement::inr(WElement::hole(5)), numeric()));

  WExpr prod = parse_wexpr("_x_");
  WElement p = WElement::pair(WElement::hole(1), WElement::hole(2));
  CHECK(w_leq(prod, p, p, equal_only()));
  CHECK_FALSE(w_leq(prod, p, WElement::pair(WElement::hole(2), WElement::hole(1)), numeric()));

  WExpr ss = parse_wexpr("_**");
  auto seq = [](std::vector<std::uint64_t> v) {
    std::vector<WElement> items;
    for (auto x : v) items.push_back(WElement::hole(x));
    return WElement::list(items);
  };
  WElement a_b = WElement::list({seq({0}), seq({1})});
  WElement b_a = WElement::list({seq({1}), seq({0})});
  CHECK_FALSE(w_leq(ss, a_b, b_a, equal_only()));
  CHECK(w_leq(ss, a_b, WElement::list({seq({1, 0}), seq({1})}), equal_only()));

  WExpr cst = parse_wexpr("P{2;0<1}");
  CHECK(w_leq(cst, WElement::constant(0), WElement::constant(1), numeric()));
  CHECK_FALSE(w_leq(cst, WElement::constant(1), WElement::constant(0), numeric()));

  CHECK_THROWS_AS(w_leq(prod, WElement::hole(0), p, numeric()), ShapeError);
  CHECK_THROWS_AS(check_shape(cst, WElement::constant(2)), ShapeError);
}

TEST_CASE("naked terms") {
  WElement h = WElement::hole(7);
  auto [n1, v1] = naked_term(h);
  CHECK(n1 == WElement::hole(0));
  CHECK(v1 == std::vector<std::uint64_t>{7});

  WElement pc = WElement::pair(WElement::hole(3), WElement::constant(1));
  auto [n2, v2] = naked_term(pc);
  CHECK(n2 == WElement::pair(WElement::hole(0), WElement::constant(1)));
  CHECK(v2 == std::vector<std::uint64_t>{3});

  WElement st = WElement::list({WElement::hole(4), WElement::hole(9)});
  auto [n3, v3] = naked_term(st);
  CHECK(v3 == std::vector<std::uint64_t>{4, 9});
  CHECK(substitute(n3, v3) == st);
  std::vector<std::uint64_t> too_few{1};
  CHECK_THROWS_AS(substitute(n3, too_few), ShapeError);

  CHECK(map_holes(st, [](std::uint64_t v) { return v + 1; }) == WElement::list({WElement::hole(5), WElement::hole(10)}));
}

TEST_CASE("element sizes and enumeration") {
  auto unit = [](std::uint64_t) { return std::size_t{1}; };
  WExpr b = parse_wexpr("B(_)");
  WElement t = parse_welement(b, "(0, (0, 0))");
  CHECK(element_size(t, unit) == 5);
  CHECK(element_size(WElement::list({}), unit) == 1);

  std::vector<std::vector<std::uint64_t>> carrier{{}, {0, 1}};
  CHECK(enumerate_elements(b, 1, carrier).size() == 2);
  CHECK(enumerate_elements(b, 2, carrier).empty());
  CHECK(enumerate_elements(b, 3, carrier).size() == 4);
  CHECK(enumerate_elements(parse_wexpr("_*"), 3, carrier).size() == 4);
  auto pairs = enumerate_elements(parse_wexpr("_x_+P{1;}"), 3, carrier);
  CHECK(pairs.size() == 4);

  for (const WElement& e : enumerate_elements(b, 5, carrier)) {
    CHECK(element_size(e, unit) == 5);
    CHECK(parse_welement(b, plain(b, e)) == e);
  }
}

TEST_CASE("element text") {
  WExpr w = parse_wexpr("(_xP{2;})*+B(_+_)");
  WElement e = parse_welement(w, "inl [(1, #0), (<2>, #1)]");
  CHECK(plain(w, e) == "inl [(1, #0), (2, #1)]");
  WElement f = parse_welement(w, "inr (leaf inl 0, leaf inr 1)");
  CHECK(plain(w, f) == "inr (leaf inl 0, leaf inr 1)");
  CHECK_THROWS_AS(parse_welement(w, "inl [(1, #2)]"), ParseError);
  CHECK_THROWS_AS(parse_welement(w, "inl [(1, #0)"), ParseError);
}

TEST_CASE("quasi embeddings") {
  FinitePoset chain = FinitePoset::chain(2);
  FinitePoset anti(2);
  std::vector<std::size_t> id{0, 1};
  CHECK(is_quasi_embedding(anti, anti, id));
  CHECK(is_quasi_embedding(chain, chain, id));
  CHECK_FALSE(is_quasi_embedding(anti, chain, id));
  CHECK(is_quasi_embedding(chain, anti, id));
}

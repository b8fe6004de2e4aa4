#include <doctest.h>

#include <algorithm>

#include "thetawpo/errors.hpp"
#include "thetawpo/tree_terms.hpp"

using namespace thetawpo;

namespace {

const WExpr& bw() {
  static const WExpr w = parse_wexpr("B(_)");
  return w;
}

const WExpr& ssw() {
  static const WExpr w = parse_wexpr("_**");
  return w;
}

TreeTerm bt(const char* s) { return parse_tree_term(s, bw()); }

std::vector<std::size_t> counts_by_size(const std::vector<TreeTerm>& ts, std::size_t bound) {
  std::vector<std::size_t> out(bound + 1, 0);
  for (TreeTerm t : ts) ++out[t.size()];
  return out;
}

}  // namespace

TEST_CASE("tree term construction") {
  TreeTerm c;
  CHECK(c.is_circ());
  CHECK(c.size() == 1);
  CHECK(c.children().empty());
  CHECK_THROWS_AS(components(c), DomainError);

  TreeTerm l = TreeTerm::apply(WElement::leaf(hole(c)));
  CHECK(l.size() == 2);
  CHECK(TreeTerm::apply(components(l)) == l);
  CHECK(TreeTerm::apply(WElement::leaf(hole(c))) == l);
  CHECK(to_string(l, bw()) == "o[o]");

  TreeTerm fig = bt("o[(o, o[(o, o)])]");
  CHECK(fig.size() == 7);
  CHECK(to_string(fig, bw()) == "o[(o, o[(o, o)])]");
  CHECK(fig.children().size() == 2);

  CHECK_THROWS_AS(TreeTerm::apply(WElement::leaf(WElement::hole(1u << 30))), DomainError);
  CHECK_THROWS_AS(check_term(ssw(), fig), ShapeError);
  CHECK_THROWS_AS(bt("o[(o, )]"), ParseError);
  CHECK_THROWS_AS(bt("x"), ParseError);
}

TEST_CASE("tree term order") {
  TreeOrder ord(bw());
  TreeTerm c;
  TreeTerm s = bt("o[(o, o)]");
  TreeTerm t = bt("o[(o, o[(o, o)])]");
  CHECK(ord.leq(c, t));
  CHECK(ord.leq(s, t));
  CHECK_FALSE(ord.leq(t, s));
  CHECK(ord.leq(t, t));
  for (TreeTerm ch : t.children()) CHECK(ord.leq(ch, t));
  CHECK(t_leq(bt("o[o]"), s, bw()));
  CHECK_FALSE(t_leq(s, bt("o[o[o]]"), bw()));
}

TEST_CASE("tree term enumeration") {
  auto b = enumerate_trees(bw(), 1);
  REQUIRE(b.size() == 1);
  CHECK(b[0].is_circ());

  auto b4 = enumerate_trees(bw(), 4);
  CHECK(std::find(b4.begin(), b4.end(), bt("o[o]")) != b4.end());

  auto b8 = enumerate_trees(bw(), 8);
  CHECK(counts_by_size(b8, 8) == std::vector<std::size_t>{0, 1, 1, 1, 2, 4, 9, 21, 51});

  auto s6 = enumerate_trees(ssw(), 6);
  CHECK(counts_by_size(s6, 6) == std::vector<std::size_t>{0, 1, 1, 1, 2, 5, 13});

  for (const auto& w : {bw(), ssw(), parse_wexpr("_*"), parse_wexpr("_x_+P{2;}")}) {
    auto ts = enumerate_trees(w, 6);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(parse_tree_term(to_string(ts[i], w), w) == ts[i]);
      if (i) CHECK(ts[i - 1].size() <= ts[i].size());
    }
    auto sorted = ts;
    std::sort(sorted.begin(), sorted.end(), [](TreeTerm a, TreeTerm b) { return a.id() < b.id(); });
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("fixpoint oracle") {
  auto one = closure_oracle({TreeTerm()}, bw());
  CHECK(one == std::vector<std::vector<bool>>{{true}});

  auto u = enumerate_trees(bw(), 6);
  auto r = closure_oracle(u, bw());
  TreeOrder ord(bw());
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(r[0][i]);
    for (std::size_t j = 0; j < u.size(); ++j) CHECK(r[i][j] == ord.leq(u[i], u[j]));
  }
  CHECK_THROWS_AS(closure_oracle({bt("o[o]")}, bw()), DomainError);
}

TEST_CASE("bounded left sets") {
  CHECK(left_set_bounded(TreeTerm(), bw(), 6).empty());
  auto l1 = left_set_bounded(bt("o[o]"), bw(), 1);
  REQUIRE(l1.size() == 1);
  CHECK(l1[0].is_circ());
  CHECK(left_set_bounded(bt("o[o]"), bw(), 8).size() == 1);
  CHECK(left_set_bounded(bt("o[(o, o)]"), bw(), 8).size() == 8);
}

TEST_CASE("case analysis for sequences of sequences") {
  TreeTerm t = parse_tree_term("o[[[o]]]", ssw());
  TreeTerm s = parse_tree_term("o[[[], []]]", ssw());
  CHECK(xstarstar_membership_cases(t, s));
  TreeTerm u = parse_tree_term("o[[[o[[[o]]]]]]", ssw());
  CHECK_FALSE(xstarstar_membership_cases(t, u));
  CHECK_THROWS_AS(xstarstar_membership_cases(TreeTerm(), s), DomainError);

  auto ts = enumerate_trees(ssw(), 6);
  TreeOrder ord(ssw());
  for (TreeTerm a : ts)
    for (TreeTerm b : ts)
      if (!a.is_circ() && !b.is_circ()) CHECK(xstarstar_membership_cases(a, b) == !ord.leq(a, b));
}

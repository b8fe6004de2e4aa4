#include <doctest.h>

#include <algorithm>

#include "thetawpo/errors.hpp"
#include "thetawpo/gap_trees.hpp"

using namespace thetawpo;

namespace {

LabeledTree lt(const char* s) { return parse_labeled_tree(s); }

bool leq(const char* s, const char* t, bool structured = true) { return gap_leq(lt(s), lt(t), structured); }

const WExpr& bw() {
  static const WExpr w = parse_wexpr("B(_)");
  return w;
}

}  // namespace

TEST_CASE("labelled tree text") {
  LabeledTree fig = lt("(0 (1 (0) (0 (1 (0) (0)))))");
  CHECK(fig.size() == 7);
  CHECK(to_string(fig) == "(0 (1 (0) (0 (1 (0) (0)))))");
  CHECK(to_string(lt("  ( 3 (12) )")) == "(3 (12))");
  CHECK_THROWS_AS(lt("(0 (1)"), ParseError);
  CHECK_THROWS_AS(lt("0"), ParseError);
  try {
    lt("(0 x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  std::string dot = to_dot(lt("(0 (1))"));
  CHECK(dot.find("digraph T {") == 0);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("canonical form") {
  CHECK(canonical(lt("(0 (1) (0))")) == lt("(0 (0) (1))"));
  CHECK(canonical(lt("(0 (1 (1) (0)) (0))")) == lt("(0 (0) (1 (0) (1)))"));
}

TEST_CASE("gap embedding") {
  CHECK_FALSE(leq("(0)", "(1)"));
  CHECK(leq("(0)", "(1 (0))"));
  CHECK(leq("(1)", "(0 (1))"));
  CHECK_FALSE(leq("(1)", "(0)"));
  CHECK(leq("(0 (0))", "(0 (1 (0)))"));
  CHECK(leq("(0 (1))", "(0 (0 (1)))"));
  CHECK_FALSE(leq("(1 (1))", "(1 (0 (1)))"));
  CHECK(leq("(0 (1))", "(0 (1 (1)))"));
  CHECK(leq("(0 (0) (0))", "(0 (0 (0) (0)))"));
  CHECK_FALSE(leq("(0 (0 (0)) (0))", "(0 (0) (0 (0)))"));
  CHECK(leq("(0 (0 (0)) (0))", "(0 (0) (0 (0)))", false));
  CHECK_FALSE(leq("(0 (1) (0))", "(0 (0) (1))"));
  CHECK(leq("(0 (1) (0))", "(0 (0) (1))", false));
}

TEST_CASE("gap embedding agrees with brute force on small trees") {
  std::vector<LabeledTree> ts = enumerate_labeled_trees(4, 2);
  for (bool structured : {true, false})
    for (const LabeledTree& s : ts)
      for (const LabeledTree& t : ts) CHECK(gap_leq(s, t, structured) == brute_gap_leq(s, t, structured));
  LabeledTree big = lt("(0 (0) (0) (0) (0) (0) (0) (0) (0) (0) (0))");
  CHECK_THROWS_AS(brute_gap_leq(big, big, true), RangeError);
}

TEST_CASE("downsets") {
  LabeledTree t = lt("(0 (1 (0)) (0))");
  std::vector<LabeledTree> down = gap_downset(t, true);
  CHECK(std::is_sorted(down.begin(), down.end()));
  for (const LabeledTree& s : enumerate_labeled_trees(4, 2)) {
    bool in = std::binary_search(down.begin(), down.end(), s);
    CHECK(in == gap_leq(s, t, true));
  }
}

TEST_CASE("labelled tree enumeration") {
  std::vector<std::size_t> counts(4, 0);
  for (const LabeledTree& t : enumerate_labeled_trees(3, 2)) ++counts[t.size()];
  CHECK(counts == std::vector<std::size_t>{0, 2, 4, 16});
}

TEST_CASE("isomorphism with the 0/1 class") {
  CHECK(in_t2bar(lt("(0)")));
  CHECK_FALSE(in_t2bar(lt("(1)")));
  CHECK(in_t2bar(lt("(0 (1 (0) (0 (1 (0) (0)))))")));
  CHECK_FALSE(in_t2bar(lt("(0 (1 (0)))")));
  CHECK_FALSE(in_t2bar(lt("(0 (0) (0))")));
  CHECK_THROWS_AS(from_gap(lt("(1)")), DomainError);

  TreeTerm fig = parse_tree_term("o[(o, o[(o, o)])]", bw());
  CHECK(to_string(to_gap(fig)) == "(0 (1 (0) (0 (1 (0) (0)))))");
  for (TreeTerm t : enumerate_trees(bw(), 6)) {
    LabeledTree g = to_gap(t);
    CHECK(in_t2bar(g));
    CHECK(g.size() == t.size());
    CHECK(from_gap(g) == t);
  }
  CHECK_THROWS_AS(to_gap(parse_tree_term("o[[o]]", parse_wexpr("_*"))), ShapeError);
}

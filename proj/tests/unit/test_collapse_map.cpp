#include <doctest.h>

#include "thetawpo/collapse_map.hpp"
#include "thetawpo/errors.hpp"
#include "thetawpo/ordinal_ops.hpp"
#include "thetawpo/ordinal_text.hpp"

using namespace thetawpo;

namespace {

const WExpr& bw() {
  static const WExpr w = parse_wexpr("B(_)");
  return w;
}

Ordinal full(const char* s) { return parse_ordinal(s, System::Full); }

std::string g(const char* s) { return to_string(ord_to_tree(full(s)), bw()); }

std::string f(const char* s) {
  return to_string(bw(), cnf_tree(full(s)), [](std::uint64_t id) { return to_string(TreeTerm::from_id(static_cast<std::uint32_t>(id)), bw()); });
}

}  // namespace

TEST_CASE("collapse map on small terms") {
  CHECK(g("0") == "o");
  CHECK(g("v(0)") == "o[o]");
  CHECK(f("0") == "o");
  CHECK(f("v(0)") == "((o, o[o]), o)");
  CHECK(g("v(0) + v(0)") == "o[(o, (o, o))]");
  CHECK_THROWS_AS(ord_to_tree(full("O")), DomainError);
}

TEST_CASE("collapse map reflects the order") {
  std::vector<Ordinal> cs;
  for (Ordinal a : enumerate_terms(System::Full, EnumBounds{3, true, 2, 2, 2})) cs.push_back(a);
  REQUIRE(cs.size() > 10);
  for (Ordinal a : cs)
    for (Ordinal b : cs)
      if (t_leq(ord_to_tree(a), ord_to_tree(b), bw())) CHECK(compare(a, b) != Ordering3::GT);
}

TEST_CASE("leaf labels of f") {
  for (Ordinal b : enumerate_terms(System::Full, EnumBounds{3, false, 2, 2, 2})) {
    std::vector<Ordinal> ks = coefficient_set(b);
    ks.push_back(Ordinal::zero());
    std::vector<TreeTerm> want;
    for (Ordinal k : ks) want.push_back(ord_to_tree(k));
    std::sort(want.begin(), want.end(), [](TreeTerm x, TreeTerm y) { return x.id() < y.id(); });
    want.erase(std::unique(want.begin(), want.end()), want.end());
    CHECK(leaf_labels(cnf_tree(b)) == want);
  }
}

TEST_CASE("normal arguments") {
  CHECK(is_collapse_normal(full("0")));
  CHECK(is_collapse_normal(full("O")));
}

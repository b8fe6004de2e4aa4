#include "thetawpo/collapse_map.hpp"

#include <algorithm>

#include "thetawpo/errors.hpp"
#include "thetawpo/ordinal_text.hpp"

namespace thetawpo {

namespace {

WElement circ_leaf() { return WElement::leaf(hole(TreeTerm())); }

TreeTerm g(Ordinal a);

WElement f(Ordinal b) {
  if (b.is_zero()) return circ_leaf();
  std::vector<Monomial> ms;
  if (b.kind() == Kind::Cnf)
    ms.assign(b.monomials().begin(), b.monomials().end());
  else
    ms.push_back(Monomial{Ordinal::zero(), b});
  WElement spine = circ_leaf();
  for (auto it = ms.rbegin(); it != ms.rend(); ++it)
    spine = WElement::node(WElement::node(f(it->exponent), WElement::leaf(hole(g(it->coefficient)))), std::move(spine));
  return spine;
}

TreeTerm g(Ordinal a) {
  switch (a.kind()) {
    case Kind::Zero: return TreeTerm();
    case Kind::Theta:
      if (!is_collapse_normal(a.arg())) throw DomainError("collapsed term " + to_string(a) + " is not in normal form");
      return TreeTerm::apply(f(a.arg()));
    case Kind::Sum: {
      auto parts = a.parts();
      WElement comb = circ_leaf();
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (it->kind() != Kind::OmegaPow) throw DomainError("sum " + to_string(a) + " is not a Full-system term");
        comb = WElement::node(WElement::leaf(hole(g(it->arg()))), std::move(comb));
      }
      return TreeTerm::apply(std::move(comb));
    }
    default: throw DomainError("term " + to_string(a) + " is not countable");
  }
}

void collect(const WElement& b, std::vector<TreeTerm>& out) {
  if (b.kind == EKind::BLeaf) {
    out.push_back(TreeTerm::from_id(static_cast<std::uint32_t>(b.kids[0].value)));
    return;
  }
  for (const WElement& k : b.kids) collect(k, out);
}

void require_full(Ordinal a) {
  if (ValidationReport r = validate(a, System::Full); !r)
    throw DomainError("not a Full-system term (" + r.clause + "): " + to_string(a));
}

}  // namespace

bool is_collapse_normal(Ordinal b) { return less(max_coefficient(b), Ordinal::theta(b)); }

TreeTerm ord_to_tree(Ordinal a) {
  require_full(a);
  if (!is_countable(a)) throw DomainError("term " + to_string(a) + " is not countable");
  return g(a);
}

WElement cnf_tree(Ordinal b) {
  require_full(b);
  return f(b);
}

std::vector<TreeTerm> leaf_labels(const WElement& b) {
  std::vector<TreeTerm> out;
  collect(b, out);
  std::sort(out.begin(), out.end(), [](TreeTerm x, TreeTerm y) { return x.id() < y.id(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace thetawpo

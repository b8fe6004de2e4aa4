#pragma once

// The map from countable Full-system ordinals into T(B(_)) and the auxiliary
// binary trees it places under a circle for collapsed terms.

#include "thetawpo/ordinal.hpp"
#include "thetawpo/tree_terms.hpp"

namespace thetawpo {

/// g(0) = o. A sum w^a1 + ... + w^an becomes o[D1] with the right comb
/// Di = (g(ai), D(i+1)) ending in (g(an), o). A collapsed term v(b) becomes
/// o[cnf_tree(b)]. Throws DomainError on uncountable or invalid input and on a
/// collapsed subterm v(b) with k(b) not below v(b).
TreeTerm ord_to_tree(Ordinal a);

/// f(0) is a single leaf o. For b = O^b1*c1 + ... + O^bn*cn (a countable b read
/// as O^0*b) it is C1 with Ci = ((f(bi), g(ci)), C(i+1)) and C(n+1) the leaf o.
/// The result is an element of B(_) whose leaves hold tree-term ids.
WElement cnf_tree(Ordinal b);

/// k(b) < v(b), the normal-form condition for collapsed terms.
bool is_collapse_normal(Ordinal b);

/// The terms held in the leaves of a B(_) element, without duplicates.
std::vector<TreeTerm> leaf_labels(const WElement& b);

}  // namespace thetawpo

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "thetawpo/ordinal.hpp"

namespace thetawpo {

/// Hessenberg natural sum. Countable operands are merged on base-omega
/// principal parts, uncountable ones on Omega-monomials.
Ordinal natural_sum(Ordinal a, Ordinal b, System sys = System::Full);

/// Hessenberg natural product.
Ordinal natural_product(Ordinal a, Ordinal b, System sys = System::Full);

/// Omega_n[a]: Omega_0[a] = a, Omega_{n+1}[a] = Omega^{Omega_n[a]}.
/// Throws RangeError in the Restricted system once an exponent stops being a natural.
Ordinal omega_tower(unsigned n, Ordinal a, System sys = System::Full);

// ---------------------------------------------------------------------------
// Enumeration.

struct EnumBounds {
  unsigned max_complexity = 0;
  bool countable_only = false;
  /// Maximum number of summands in a Sum. Terms of a fixed complexity are
  /// infinitely many (every natural number has G = 1 in Full), so a width cap
  /// is needed for the output to be finite.
  unsigned width = 2;
  /// Maximum number of monomials in a Cnf.
  unsigned cnf_width = 2;
  /// Largest natural used as an Omega-exponent in the Restricted system.
  unsigned max_exponent = 2;
};

/// Every valid term of `sys` within the bounds, each exactly once, grouped by
/// ascending complexity and deterministic within a group.
std::vector<Ordinal> enumerate_terms(System sys, const EnumBounds& bounds);

/// A random valid term of `sys` with complexity at most `bounds.max_complexity`,
/// respecting the same width caps. Deterministic for a given generator state.
Ordinal random_term(System sys, const EnumBounds& bounds, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Goedel coding. Every natural number decodes to at most one syntax tree, and
// the code of a subterm (hence of every element of K(t)) never exceeds the
// code of t.

using Code = boost::multiprecision::cpp_int;

Code encode(Ordinal t);
/// Throws DomainError when `n` is not the code of a valid term of `sys`.
Ordinal decode(const Code& n, System sys);

}  // namespace thetawpo

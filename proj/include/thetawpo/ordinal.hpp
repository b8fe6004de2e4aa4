#pragma once

// Terms of the two collapsing notation systems below the Howard-Bachmann ordinal.
//
// A term is a handle to an immutable, hash-consed node: two handles are equal
// exactly when the terms are syntactically identical, so equality and hashing
// are O(1). Nodes are never freed.
//
// Term shapes:
//   Zero
//   Theta(a)                 the collapse  v(a)
//   Sum(p1, ..., pm)         countable sum of principal parts, m >= 2
//   Cnf((e1,c1), ...)        Omega^e1 * c1 + ..., base-Omega normal form
// Principal parts occur only inside Sum:
//   OmegaPow(d)              w^d       (system Full)
//   ThetaPart(b)             v(b)      (system Restricted)

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace thetawpo {

enum class System { Full, Restricted };

enum class Ordering3 { LT, EQ, GT };

enum class Kind : std::uint8_t { Zero, Theta, Sum, Cnf, OmegaPow, ThetaPart };

std::string to_string(System sys);
std::string to_string(Ordering3 ord);
std::optional<System> parse_system(const std::string& name);

namespace detail {
struct Node;
}

struct Monomial;

class Ordinal {
 public:
  /// Zero.
  Ordinal();

  static Ordinal zero() { return Ordinal(); }
  static Ordinal theta(Ordinal arg);
  static Ordinal omega_pow(Ordinal exponent);
  static Ordinal theta_part(Ordinal arg);

  // Raw constructors intern exactly what they are given, with no sorting or
  // merging. Use them to build arbitrary trees (e.g. for validate); the
  // arithmetic in ordinal_ops.hpp builds canonical terms.
  static Ordinal raw_sum(std::vector<Ordinal> parts);
  static Ordinal raw_cnf(std::vector<Monomial> monomials);

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_principal_part() const { return kind() == Kind::OmegaPow || kind() == Kind::ThetaPart; }

  /// Argument of Theta, OmegaPow or ThetaPart.
  Ordinal arg() const;
  std::span<const Ordinal> parts() const;
  std::span<const Monomial> monomials() const;

  /// Node count.
  std::size_t size() const;
  std::uint32_t id() const;

  friend bool operator==(Ordinal a, Ordinal b) { return a.node_ == b.node_; }

  const detail::Node* node() const { return node_; }
  static Ordinal from_node(const detail::Node* n) { return Ordinal(n); }

 private:
  explicit Ordinal(const detail::Node* n) : node_(n) {}

  const detail::Node* node_;
};

struct Monomial {
  Ordinal exponent;
  Ordinal coefficient;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct OrdinalHash {
  std::size_t operator()(Ordinal a) const noexcept { return std::hash<std::uint32_t>{}(a.id()); }
};

// ---------------------------------------------------------------------------
// Convenience builders (canonical forms).

/// The natural number n in the given system: 0, v(0), or n unit summands.
Ordinal natural(std::uint64_t n, System sys);
/// Omega = Omega^v(0) * v(0).
Ordinal big_omega();
/// True iff `a` denotes a natural number (0, v(0), or a sum of unit parts).
bool is_natural(Ordinal a);
/// Value of a natural-number term; nullopt when `a` is not one.
std::optional<std::uint64_t> natural_value(Ordinal a);

// ---------------------------------------------------------------------------
// Structural predicates.

/// Zero, Theta, Sum (and principal parts, read as summands) are countable.
bool is_countable(Ordinal a);
/// Theta terms, and single Omega-monomials whose coefficient is a Theta term.
bool is_additively_closed(Ordinal a);
/// Theta(b) with b uncountable, or w^e with e such a term: the epsilon numbers.
bool is_epsilon(Ordinal a);

// ---------------------------------------------------------------------------
// Order.

/// Order of the denoted ordinals. Principal parts compare as the ordinal they
/// denote (w^0 and v(0) are EQ). Throws InternalError if recursion fuel runs out.
Ordering3 compare(Ordinal a, Ordinal b);
inline bool less(Ordinal a, Ordinal b) { return compare(a, b) == Ordering3::LT; }

/// Ordering on principal parts (OmegaPow, ThetaPart or a standalone Theta).
Ordering3 compare_principal(Ordinal p, Ordinal q);

/// Exponent e with w^e equal to the principal part `p`.
/// OmegaPow(d) gives d; ThetaPart(b) uses the epsilon-shift rule.
Ordinal exponent_of_principal(Ordinal p, System sys = System::Full);

/// Inverse of exponent_of_principal: the Theta term denoting w^e.
Ordinal theta_of_exponent(Ordinal e, System sys = System::Full);

// ---------------------------------------------------------------------------
// Coefficients and complexity.

/// K(a) sorted ascending, without duplicates.
std::vector<Ordinal> coefficient_set(Ordinal a);
/// k(a) = max K(a).
Ordinal max_coefficient(Ordinal a);
/// G (Full) or G' (Restricted).
unsigned complexity(Ordinal a, System sys);

// ---------------------------------------------------------------------------
// Validation.

struct ValidationReport {
  bool valid = true;
  std::string clause;  // which rule failed, empty when valid
  std::string detail;

  explicit operator bool() const { return valid; }
};

ValidationReport validate(Ordinal t, System sys);

}  // namespace thetawpo

template <>
struct std::hash<thetawpo::Ordinal> : thetawpo::OrdinalHash {};

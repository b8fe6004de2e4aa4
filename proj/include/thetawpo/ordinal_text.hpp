#pragma once

#include <string>
#include <string_view>

#include "thetawpo/ordinal.hpp"

namespace thetawpo {

/// Canonical un-sugared text: `0`, `v(T)`, `w^T`, `O^T*T`, summands joined by ` + `.
std::string to_string(Ordinal t);

/// Parses the term grammar and returns the canonical term it denotes in `sys`.
///
///   term    := summand ('+' summand)*
///   summand := '0' | digits | 'v(' term ')' | 'w^' atom | 'O' | 'O^' atom '*' atom | '(' term ')'
///
/// Decimal n is n unit summands, `1` alone is v(0), `O` is O^v(0)*v(0).
/// Summands are combined like a natural sum, so their order does not matter.
/// Throws ParseError (with byte position) on bad syntax, on a bare `w^T`, or
/// when the result is not a valid term of `sys`.
Ordinal parse_ordinal(std::string_view text, System sys);

}  // namespace thetawpo

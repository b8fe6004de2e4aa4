#include "thetawpo/ordinal_text.hpp"

#include <cctype>
#include <vector>

#include "thetawpo/errors.hpp"
#include "thetawpo/ordinal_ops.hpp"

namespace thetawpo {

namespace {

void print(Ordinal t, std::string& out);

void print_atom(Ordinal t, std::string& out) {
  bool wrap = t.kind() == Kind::Sum || t.kind() == Kind::Cnf;
  if (wrap) out += '(';
  print(t, out);
  if (wrap) out += ')';
}

void print(Ordinal t, std::string& out) {
  switch (t.kind()) {
    case Kind::Zero: out += '0'; return;
    case Kind::Theta:
    case Kind::ThetaPart:
      out += "v(";
      print(t.arg(), out);
      out += ')';
      return;
    case Kind::OmegaPow:
      out += "w^";
      print_atom(t.arg(), out);
      return;
    case Kind::Sum: {
      bool first = true;
      for (Ordinal p : t.parts()) {
        if (!first) out += " + ";
        first = false;
        print(p, out);
      }
      return;
    }
    case Kind::Cnf: {
      bool first = true;
      for (const Monomial& m : t.monomials()) {
        if (!first) out += " + ";
        first = false;
        out += "O^";
        print_atom(m.exponent, out);
        out += '*';
        print_atom(m.coefficient, out);
      }
      return;
    }
  }
}

class Parser {
 public:
  // Whitespace is dropped up front; `where_` maps positions back to the input.
  Parser(std::string_view text, System sys) : sys_(sys) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      s_ += text[i];
      where_.push_back(i);
    }
    where_.push_back(text.size());
  }

  Ordinal run() {
    Ordinal t = term();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  // A lone `w^T` or `O^0*c` is not a term, though both are fine inside a sum.
  struct Summand {
    Ordinal value;
    bool partial = false;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(where_[pos_], msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(where_[at], msg); }

  bool eat(std::string_view tok) {
    if (std::string_view(s_).substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Ordinal checked(Ordinal t, std::size_t at) {
    if (auto r = validate(t, sys_); !r) throw InvalidTermError(where_[at], r.clause, r.detail);
    return t;
  }

  Ordinal term() {
    std::size_t start = pos_;
    Summand first = summand();
    Ordinal acc = first.value;
    std::size_t count = 1;
    while (eat("+")) {
      acc = natural_sum(acc, summand().value, sys_);
      ++count;
    }
    if (count == 1 && first.partial) throw InvalidTermError(where_[start], "sum-length", "a lone w^T or O^0*c is not a term");
    return checked(acc, start);
  }

  Ordinal atom() {
    std::size_t start = pos_;
    Summand a = summand();
    if (a.partial) fail_at(start, "a lone w^T or O^0*c is not a term");
    return a.value;
  }

  Summand summand() {
    std::size_t start = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (n > 1'000'000) fail("numeral too large");
        n = n * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      }
      return {natural(n, sys_)};
    }
    if (eat("v(")) {
      Ordinal arg = term();
      expect(")");
      return {checked(Ordinal::theta(arg), start)};
    }
    if (eat("w^")) {
      std::size_t at = pos_;
      Ordinal e = atom();
      if (!is_countable(e)) fail_at(at, "the exponent of w^ must be countable");
      return {theta_of_exponent(e, sys_), true};
    }
    if (eat("O^")) {
      Ordinal e = atom();
      expect("*");
      std::size_t at = pos_;
      Ordinal k = atom();
      if (!e.is_zero()) return {checked(Ordinal::raw_cnf({Monomial{e, k}}), start)};
      if (k.is_zero() || !is_countable(k)) fail_at(at, "a coefficient must be countable and nonzero");
      return {k, true};
    }
    if (eat("O")) return {big_omega()};
    if (eat("(")) {
      Ordinal t = term();
      expect(")");
      return {t};
    }
    fail("expected a term");
  }

  std::string s_;
  std::vector<std::size_t> where_;
  System sys_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(Ordinal t) {
  std::string out;
  print(t, out);
  return out;
}

Ordinal parse_ordinal(std::string_view text, System sys) { return Parser(text, sys).run(); }

}  // namespace thetawpo

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "thetawpo/errors.hpp"

namespace thetawpo::detail {

/// Whitespace-skipping scanner shared by the text grammars.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip();
    return pos_ == s_.size();
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  /// Like eat, but only when the keyword is not followed by a letter or digit.
  bool eat_word(std::string_view word) {
    skip();
    if (s_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t number() {
    if (!at_digit()) fail("expected a number");
    std::uint64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (n > (UINT64_MAX - 9) / 10) fail("number too large");
      n = n * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    return n;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace thetawpo::detail

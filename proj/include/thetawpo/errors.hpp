#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetawpo {

/// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed text denoting a term that breaks a rule of the notation system.
class InvalidTermError : public ParseError {
 public:
  InvalidTermError(std::size_t position, std::string clause, const std::string& message)
      : ParseError(position, message), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// A result that exists as an ordinal but has no term in the requested system.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element does not match the shape of the constructor expression it is used with.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input value was violated (e.g. a term outside the accepted class).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant, such as exhausted recursion fuel. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace thetawpo

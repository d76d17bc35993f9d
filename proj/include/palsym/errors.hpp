#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A character outside the accepted alphabet. `position` is 1-based.
class InvalidLetter : public Error {
 public:
  InvalidLetter(std::size_t position, char character)
      : Error("invalid letter '" + std::string(1, character) + "' at position " +
              std::to_string(position)),
        position_(position),
        character_(character) {}

  std::size_t position() const noexcept { return position_; }
  char character() const noexcept { return character_; }

 private:
  std::size_t position_;
  char character_;
};

/// An input exceeded an enumeration or representation guard.
class LengthBudgetExceeded : public Error {
 public:
  LengthBudgetExceeded(std::size_t length, std::size_t limit)
      : Error("length " + std::to_string(length) + " exceeds the limit of " +
              std::to_string(limit)),
        length_(length),
        limit_(limit) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t length_;
  std::size_t limit_;
};

class InvalidPair : public Error {
 public:
  InvalidPair(int alpha, int beta)
      : Error("(alpha, beta) = (" + std::to_string(alpha) + ", " + std::to_string(beta) +
              ") is not one of the seven admissible pairs") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class TerminalState : public Error {
 public:
  TerminalState() : Error("the word is already symmetric; no moves remain") {}
};

}  // namespace palsym

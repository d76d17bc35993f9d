#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palsym {

enum class Letter : std::uint8_t { A = 0, B = 1 };

constexpr Letter complement(Letter l) noexcept {
  return l == Letter::A ? Letter::B : Letter::A;
}

constexpr char to_char(Letter l) noexcept { return l == Letter::A ? 'a' : 'b'; }

enum class SymmetryClass { Palindrome, Antipalindrome, Both, Neither };

std::string_view to_string(SymmetryClass c) noexcept;

namespace bits {

constexpr std::uint64_t low_mask(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t reverse64(std::uint64_t v) noexcept {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
  v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
  return (v >> 32) | (v << 32);
}

/// Mirrors the low `n` bits of `v`.
constexpr std::uint64_t reverse(std::uint64_t v, std::size_t n) noexcept {
  return n == 0 ? 0 : reverse64(v) >> (64 - n);
}

constexpr std::uint64_t complement(std::uint64_t v, std::size_t n) noexcept {
  return ~v & low_mask(n);
}

/// True iff `v` is the numerically smallest element of its orbit under
/// reversal and complement. Used by the exhaustive scans.
constexpr bool is_canonical(std::uint64_t v, std::size_t n) noexcept {
  const std::uint64_t r = reverse(v, n);
  const std::uint64_t c = complement(v, n);
  const std::uint64_t rc = complement(r, n);
  return v <= r && v <= c && v <= rc;
}

}  // namespace bits

/// Binary word over {a, b}, packed into a single 64-bit integer.
///
/// Letter i (0-based from the left) of a word of length n lives in bit
/// n - 1 - i, so the leftmost letter is most significant and integer order
/// on words of equal length is lexicographic order with a < b.
class Word {
 public:
  static constexpr std::size_t kMaxLength = 63;

  constexpr Word() noexcept = default;

  /// Throws LengthBudgetExceeded past kMaxLength; bits above `length` are
  /// masked off.
  static Word from_bits(std::uint64_t bits, std::size_t length);
  static Word repeat(Letter letter, std::size_t count);

  constexpr std::size_t size() const noexcept { return length_; }
  constexpr bool empty() const noexcept { return length_ == 0; }
  constexpr std::uint64_t bits() const noexcept { return bits_; }

  constexpr Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1U);
  }

  std::size_t count(Letter letter) const noexcept;

  /// Removes the letter at 0-based index `i`.
  Word erase(std::size_t i) const;
  /// Strips the first and last letters; requires size() >= 2.
  Word inner() const;
  Word concat(const Word& tail) const;

  std::string str() const;

  friend constexpr bool operator==(const Word&, const Word&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept {
    if (auto c = x.length_ <=> y.length_; c != 0) return c;
    return x.bits_ <=> y.bits_;
  }

 private:
  constexpr Word(std::uint64_t bits, std::size_t length) noexcept
      : bits_(bits), length_(static_cast<std::uint8_t>(length)) {}

  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
};

enum class Alphabet {
  Letters,  ///< 'a' and 'b' only
  Binary,   ///< additionally accepts '0' for a and '1' for b
};

/// Throws InvalidLetter (1-based position) or LengthBudgetExceeded.
Word parse_word(std::string_view text, Alphabet alphabet = Alphabet::Letters);

Word reverse(const Word& w);
Word complement(const Word& w);
SymmetryClass symmetry_class(const Word& w) noexcept;

inline bool is_symmetric(const Word& w) noexcept {
  return symmetry_class(w) != SymmetryClass::Neither;
}

/// The distinct words among w, reverse(w), complement(w) and
/// reverse(complement(w)), in ascending order.
std::vector<Word> orbit(const Word& w);
Word canonical_form(const Word& w);

}  // namespace palsym

#include "palsym/word.hpp"

#include <algorithm>

#include "palsym/errors.hpp"

namespace palsym {

std::string_view to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::Palindrome: return "Palindrome";
    case SymmetryClass::Antipalindrome: return "Antipalindrome";
    case SymmetryClass::Both: return "Both";
    case SymmetryClass::Neither: return "Neither";
  }
  return "Neither";
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
  if (length > kMaxLength) throw LengthBudgetExceeded(length, kMaxLength);
  return Word(bits & bits::low_mask(length), length);
}

Word Word::repeat(Letter letter, std::size_t count) {
  return from_bits(letter == Letter::B ? ~std::uint64_t{0} : 0, count);
}

std::size_t Word::count(Letter letter) const noexcept {
  const auto ones = static_cast<std::size_t>(std::popcount(bits_));
  return letter == Letter::B ? ones : length_ - ones;
}

Word Word::erase(std::size_t i) const {
  // Letters right of i occupy the low (length - 1 - i) bits.
  const std::size_t right = length_ - 1 - i;
  const std::uint64_t low = bits_ & bits::low_mask(right);
  const std::uint64_t high = bits_ >> (right + 1);
  return Word((high << right) | low, length_ - 1U);
}

Word Word::inner() const {
  return Word((bits_ >> 1) & bits::low_mask(length_ - 2U), length_ - 2U);
}

Word Word::concat(const Word& tail) const {
  const std::size_t total = length_ + tail.length_;
  if (total > kMaxLength) throw LengthBudgetExceeded(total, kMaxLength);
  return Word((bits_ << tail.length_) | tail.bits_, total);
}

std::string Word::str() const {
  std::string out(length_, 'a');
  for (std::size_t i = 0; i < length_; ++i) out[i] = to_char((*this)[i]);
  return out;
}

Word parse_word(std::string_view text, Alphabet alphabet) {
  if (text.size() > Word::kMaxLength) throw LengthBudgetExceeded(text.size(), Word::kMaxLength);
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    unsigned bit;
    if (c == 'a') {
      bit = 0;
    } else if (c == 'b') {
      bit = 1;
    } else if (alphabet == Alphabet::Binary && (c == '0' || c == '1')) {
      bit = c == '1' ? 1 : 0;
    } else {
      throw InvalidLetter(i + 1, c);
    }
    packed = (packed << 1) | bit;
  }
  return Word::from_bits(packed, text.size());
}

Word reverse(const Word& w) {
  return Word::from_bits(bits::reverse(w.bits(), w.size()), w.size());
}

Word complement(const Word& w) {
  return Word::from_bits(bits::complement(w.bits(), w.size()), w.size());
}

SymmetryClass symmetry_class(const Word& w) noexcept {
  const std::uint64_t r = bits::reverse(w.bits(), w.size());
  const bool palindrome = r == w.bits();
  const bool anti = r == bits::complement(w.bits(), w.size());
  if (palindrome && anti) return SymmetryClass::Both;
  if (palindrome) return SymmetryClass::Palindrome;
  if (anti) return SymmetryClass::Antipalindrome;
  return SymmetryClass::Neither;
}

std::vector<Word> orbit(const Word& w) {
  const Word r = reverse(w);
  std::vector<Word> out{w, r, complement(w), complement(r)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word canonical_form(const Word& w) {
  const Word r = reverse(w);
  return std::min({w, r, complement(w), complement(r)});
}

}  // namespace palsym

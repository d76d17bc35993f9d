#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "palsym/errors.hpp"
#include "palsym/word.hpp"

using namespace palsym;

namespace {

Word w(std::string_view s) { return parse_word(s); }

template <class F>
void for_all_words(std::size_t max_len, F f) {
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) f(Word::from_bits(b, n));
  }
}

}  // namespace

TEST(ParseWord, Basics) {
  EXPECT_EQ(w("").size(), 0U);
  EXPECT_TRUE(w("").empty());
  const Word aab = w("aab");
  EXPECT_EQ(aab.size(), 3U);
  EXPECT_EQ(aab[0], Letter::A);
  EXPECT_EQ(aab[1], Letter::A);
  EXPECT_EQ(aab[2], Letter::B);
  EXPECT_EQ(aab.bits(), 0b001U);
  EXPECT_EQ(aab.str(), "aab");
}

TEST(ParseWord, InvalidLetterReportsPosition) {
  try {
    parse_word("axb");
    FAIL() << "expected InvalidLetter";
  } catch (const InvalidLetter& e) {
    EXPECT_EQ(e.position(), 2U);
    EXPECT_EQ(e.character(), 'x');
  }
  EXPECT_THROW(parse_word("01"), InvalidLetter);
}

TEST(ParseWord, BinaryAlias) {
  EXPECT_EQ(parse_word("0011", Alphabet::Binary), w("aabb"));
  EXPECT_EQ(parse_word("a1", Alphabet::Binary), w("ab"));
  EXPECT_THROW(parse_word("012", Alphabet::Binary), InvalidLetter);
}

TEST(ParseWord, LengthGuard) {
  EXPECT_NO_THROW(parse_word(std::string(63, 'b')));
  EXPECT_THROW(parse_word(std::string(64, 'a')), LengthBudgetExceeded);
  EXPECT_THROW(Word::from_bits(0, 64), LengthBudgetExceeded);
}

TEST(Word, FromBitsMasksHighBits) {
  const Word x = Word::from_bits(0xFF, 3);
  EXPECT_EQ(x.bits(), 0b111U);
  EXPECT_EQ(x, w("bbb"));
}

TEST(Word, RoundTripRender) {
  for_all_words(10, [](const Word& x) { ASSERT_EQ(parse_word(x.str()), x); });
}

TEST(Word, EraseInnerConcat) {
  EXPECT_EQ(w("abba").erase(0), w("bba"));
  EXPECT_EQ(w("abba").erase(3), w("abb"));
  EXPECT_EQ(w("aabab").erase(2), w("aaab"));
  EXPECT_EQ(w("abba").inner(), w("bb"));
  EXPECT_EQ(w("ab").inner(), w(""));
  EXPECT_EQ(w("ab").concat(w("ba")), w("abba"));
  EXPECT_EQ(Word::repeat(Letter::B, 3), w("bbb"));
  EXPECT_EQ(w("abbab").count(Letter::B), 3U);
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(w("aab")), w("baa"));
  EXPECT_EQ(reverse(w("")), w(""));
  EXPECT_EQ(reverse(w("ab")), w("ba"));
  EXPECT_EQ(reverse(Word::from_bits(1, 63)).bits(), std::uint64_t{1} << 62);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(w("aab")), w("bba"));
  EXPECT_EQ(complement(w("abab")), w("baba"));
  EXPECT_EQ(complement(w("")), w(""));
  EXPECT_EQ(complement(Letter::A), Letter::B);
  EXPECT_EQ(complement(complement(Letter::B)), Letter::B);
}

TEST(SymmetryClass, Examples) {
  EXPECT_EQ(symmetry_class(w("abba")), SymmetryClass::Palindrome);
  EXPECT_EQ(symmetry_class(w("aabb")), SymmetryClass::Antipalindrome);
  EXPECT_EQ(symmetry_class(w("aab")), SymmetryClass::Neither);
  EXPECT_EQ(symmetry_class(w("")), SymmetryClass::Both);
  EXPECT_EQ(symmetry_class(w("a")), SymmetryClass::Palindrome);
  EXPECT_EQ(symmetry_class(w("ab")), SymmetryClass::Antipalindrome);
}

TEST(Orbit, Examples) {
  EXPECT_EQ(orbit(w("aab")), (std::vector<Word>{w("aab"), w("abb"), w("baa"), w("bba")}));
  EXPECT_EQ(orbit(w("ab")), (std::vector<Word>{w("ab"), w("ba")}));
  EXPECT_EQ(orbit(w("aa")), (std::vector<Word>{w("aa"), w("bb")}));
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(w("baa")), w("aab"));
  EXPECT_EQ(canonical_form(w("ab")), w("ab"));
  EXPECT_EQ(canonical_form(w("bb")), w("aa"));
}

TEST(WordProperties, GroupActionExhaustive) {
  for_all_words(12, [](const Word& x) {
    ASSERT_EQ(reverse(reverse(x)), x);
    ASSERT_EQ(complement(complement(x)), x);
    ASSERT_EQ(reverse(complement(x)), complement(reverse(x)));
  });
}

TEST(WordProperties, SymmetryClassMatchesStringOracle) {
  for_all_words(12, [](const Word& x) {
    const std::string s = x.str();
    const SymmetryClass c = symmetry_class(x);
    const bool pal = c == SymmetryClass::Palindrome || c == SymmetryClass::Both;
    const bool anti = c == SymmetryClass::Antipalindrome || c == SymmetryClass::Both;
    ASSERT_EQ(pal, oracle::is_palindrome(s)) << s;
    ASSERT_EQ(anti, oracle::is_antipalindrome(s)) << s;
    ASSERT_EQ(pal, x == reverse(x)) << s;
    ASSERT_EQ(anti, x == complement(reverse(x))) << s;
    if (c == SymmetryClass::Both) ASSERT_TRUE(x.empty());
    if (x.size() % 2 == 1) ASSERT_FALSE(anti) << s;
  });
}

TEST(WordProperties, CanonicalFormConstantOnOrbitAndIdempotent) {
  for_all_words(12, [](const Word& x) {
    const Word c = canonical_form(x);
    ASSERT_EQ(canonical_form(c), c);
    for (const Word& y : orbit(x)) ASSERT_EQ(canonical_form(y), c);
    ASSERT_EQ(c, orbit(x).front());
    ASSERT_EQ(bits::is_canonical(x.bits(), x.size()), c == x);
  });
}

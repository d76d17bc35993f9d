#pragma once

// Test-only oracles. They work on std::string and never call the library's
// DP, bit tricks or game solver, so they stay independent of what they check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace palsym::oracle {

inline std::string word_string(std::uint64_t bits, std::size_t n) {
  std::string s(n, 'a');
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> (n - 1 - i)) & 1U) s[i] = 'b';
  }
  return s;
}

inline std::vector<std::string> all_strings(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(word_string(b, n));
  return out;
}

inline bool is_palindrome(const std::string& s) {
  return std::equal(s.begin(), s.end(), s.rbegin());
}

inline bool is_antipalindrome(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == s[s.size() - 1 - i]) return false;
  }
  return true;
}

inline bool is_symmetric(const std::string& s) { return is_palindrome(s) || is_antipalindrome(s); }

template <class Pred>
int longest_subsequence(const std::string& s, Pred pred) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
    std::string sub;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((mask >> i) & 1U) sub += s[i];
    }
    if (pred(sub)) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

inline int lps(const std::string& s) {
  return longest_subsequence(s, [](const std::string& t) { return is_palindrome(t); });
}

inline int las(const std::string& s) {
  return longest_subsequence(s, [](const std::string& t) { return is_antipalindrome(t); });
}

inline int sd(const std::string& s) {
  return static_cast<int>(s.size()) - std::max(lps(s), las(s));
}

/// Plain minimax without memoization; `minimizer` is to move.
inline int game_value(const std::string& s, bool minimizer) {
  if (is_symmetric(s)) return 0;
  int best = minimizer ? 1 << 20 : -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::string next = s;
    next.erase(i, 1);
    const int v = game_value(next, !minimizer);
    best = minimizer ? std::min(best, v) : std::max(best, v);
  }
  return best + 1;
}

}  // namespace palsym::oracle

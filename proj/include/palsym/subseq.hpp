#pragma once

#include <cstddef>
#include <vector>

#include "palsym/word.hpp"

namespace palsym {

enum class TargetKind { Palindrome, Antipalindrome };

/// Deletion count together with the two subsequence lengths it derives from:
/// value = |w| - max(lps, las).
struct SdValue {
  int value = 0;
  int lps = 0;
  int las = 0;

  friend bool operator==(const SdValue&, const SdValue&) = default;
};

struct DeletionWitness {
  std::vector<std::size_t> deleted_positions;  // 1-based, strictly increasing
  TargetKind target = TargetKind::Palindrome;
  Word residual;
};

/// Longest palindromic subsequence length.
int lps_length(const Word& w);
/// Longest antipalindromic subsequence length (always even).
int las_length(const Word& w);

/// Minimal number of deletions that leave a palindrome or an antipalindrome.
SdValue sd(const Word& w);

/// An optimal deletion set recovered by backtracking the interval tables.
///
/// Targets a palindrome when lps >= las. While walking inward, a matching end
/// pair is kept whenever keeping it is optimal; otherwise the right end is
/// dropped if that is optimal, and the left end last.
DeletionWitness sd_witness(const Word& w);

inline constexpr std::size_t kBruteForceLimit = 22;

/// Independent oracle: scans kept-position masks from the largest popcount
/// down and returns the first deletion count that leaves a symmetric word.
/// Throws LengthBudgetExceeded above kBruteForceLimit letters.
int brute_force_sd(const Word& w);

}  // namespace palsym

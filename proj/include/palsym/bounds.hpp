#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "palsym/word.hpp"

namespace palsym {

/// The seven admissible (alpha, beta) offsets of the extremal family.
inline constexpr std::array<std::pair<int, int>, 7> kConstructionPairs{
    {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 2}}};

/// Parameters of w(n, alpha, beta) = b^(n+1) (ab)^n b^(2n+1+alpha) a^(2n+1+beta).
struct ConstructionParams {
  int n = 0;
  int alpha = 0;
  int beta = 0;

  /// Throws InvalidPair for an inadmissible (alpha, beta) and DomainError for n < 0.
  void validate() const;
  int length() const noexcept { return 7 * n + 3 + alpha + beta; }

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Integer division rounding toward negative infinity.
constexpr int floor_div(int a, int b) noexcept {
  const int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

Word build_word(const ConstructionParams& p);

/// 3n + 1 + floor((alpha + beta) / 3), the guaranteed S_d of build_word(p).
int construction_bound(const ConstructionParams& p);

/// floor((n + 2 floor((n - 3) / 7)) / 3); DomainError for n < 2.
int sd_lower_bound(int n);
/// floor(n / 2); DomainError for n < 1.
int sd_upper_bound(int n);

struct BoundsRow {
  int n = 0;
  int lower = 0;
  int upper = 0;
  /// n = 7t + 3 + k with 0 <= k <= 6; present for n >= 3.
  std::optional<int> t;
  std::optional<int> k;
};

BoundsRow bounds_row(int n);

struct ConstructionCheck {
  ConstructionParams params;
  int length = 0;
  int bound = 0;
  int computed = 0;
  bool passed = false;
};

struct ConstructionReport {
  bool equality_checked = false;
  std::vector<ConstructionCheck> checks;  // ordered by n, then pair index

  bool all_passed() const noexcept;
};

/// Largest family parameter whose words fit in a Word.
inline constexpr int kConstructionMaxN = 7;

/// Evaluates S_d(build_word) for every n in 0..n_max and every admissible
/// pair; a check passes when computed >= bound (== bound with check_equality).
/// Throws LengthBudgetExceeded past kConstructionMaxN.
ConstructionReport verify_construction(int n_max, bool check_equality, unsigned workers = 1);

}  // namespace palsym

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "palsym/kernels.hpp"
#include "palsym/word.hpp"

namespace palsym {

inline constexpr std::size_t kDefaultSearchLimit = 28;

struct SearchConfig {
  unsigned worker_count = 1;
  std::size_t extremal_limit = 8;
  Kernel kernel = best_kernel();
  /// Skip words that are not the canonical member of their orbit.
  bool prune = true;
  std::size_t max_length = kDefaultSearchLimit;
  /// When set, `on_progress(done, total)` is called from the calling thread
  /// at roughly this period while a scan is running.
  std::optional<std::chrono::milliseconds> progress_interval;
  std::function<void(std::uint64_t, std::uint64_t)> on_progress;
};

struct SdTableRow {
  std::size_t n = 0;
  int sd_n = 0;
  /// Lower bound floor((n + 2 floor((n-3)/7)) / 3); undefined for n < 2.
  std::optional<int> lower;
  int upper = 0;
  /// Lexicographically smallest maximizing words (canonical ones when pruning).
  std::vector<Word> extremal;
  /// Words whose S_d was evaluated.
  std::uint64_t words_scanned = 0;
};

/// Exact max of S_d over all words of length n. Results do not depend on
/// worker_count or kernel. Throws LengthBudgetExceeded if n > max_length and
/// DomainError for n == 0 or worker_count == 0.
SdTableRow sd_max(std::size_t n, const SearchConfig& config = {});

std::vector<SdTableRow> compute_table(std::size_t n_min, std::size_t n_max,
                                      const SearchConfig& config = {});

/// Published S_d(n) values for 1 <= n <= 20.
const std::map<std::size_t, int>& reference_table();

struct TableMismatch {
  std::size_t n = 0;
  int expected = 0;
  int computed = 0;

  friend bool operator==(const TableMismatch&, const TableMismatch&) = default;
};

/// Rows outside the published range are ignored.
std::vector<TableMismatch> compare_with_reference(const std::vector<SdTableRow>& rows);

}  // namespace palsym

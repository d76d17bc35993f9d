#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "palsym/search.hpp"

namespace palsym {

enum class Suite { Construction, Bounds, Oracle, Peeling, Invariance, Game };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view suite_name(Suite s) noexcept;
/// --max-n used when the caller does not give one.
std::size_t default_max_n(Suite s) noexcept;
/// Largest accepted --max-n.
std::size_t max_n_limit(Suite s) noexcept;

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  Suite suite = Suite::Construction;
  std::vector<CheckLine> lines;

  bool passed() const noexcept;
};

struct VerifyOptions {
  std::optional<std::size_t> max_n;  // default_max_n when empty
  SearchConfig search;
  /// Construction suite: require equality rather than the inequality.
  bool check_equality = true;
  /// Oracle suite: random words per length beyond the exhaustive range.
  std::size_t random_samples = 200;
  std::uint64_t seed = 20240611;
};

/// Throws LengthBudgetExceeded when max_n exceeds the suite's limit.
SuiteReport run_suite(Suite suite, const VerifyOptions& options);

}  // namespace palsym

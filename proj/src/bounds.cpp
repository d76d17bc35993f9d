#include "palsym/bounds.hpp"

#include <algorithm>
#include <thread>

#include "palsym/errors.hpp"
#include "palsym/subseq.hpp"

namespace palsym {

void ConstructionParams::validate() const {
  if (n < 0) throw DomainError("construction parameter n must be nonnegative");
  const bool admissible = std::find(kConstructionPairs.begin(), kConstructionPairs.end(),
                                    std::pair{alpha, beta}) != kConstructionPairs.end();
  if (!admissible) throw InvalidPair(alpha, beta);
  if (length() > static_cast<int>(Word::kMaxLength)) {
    throw LengthBudgetExceeded(static_cast<std::size_t>(length()), Word::kMaxLength);
  }
}

Word build_word(const ConstructionParams& p) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.n);
  Word alternating;
  for (std::size_t i = 0; i < n; ++i) alternating = alternating.concat(parse_word("ab"));
  return Word::repeat(Letter::B, n + 1)
      .concat(alternating)
      .concat(Word::repeat(Letter::B, 2 * n + 1 + static_cast<std::size_t>(p.alpha)))
      .concat(Word::repeat(Letter::A, 2 * n + 1 + static_cast<std::size_t>(p.beta)));
}

int construction_bound(const ConstructionParams& p) {
  p.validate();
  return 3 * p.n + 1 + (p.alpha + p.beta) / 3;
}

int sd_lower_bound(int n) {
  if (n < 2) throw DomainError("the lower bound is defined for n >= 2");
  return floor_div(n + 2 * floor_div(n - 3, 7), 3);
}

int sd_upper_bound(int n) {
  if (n < 1) throw DomainError("the upper bound is defined for n >= 1");
  return n / 2;
}

BoundsRow bounds_row(int n) {
  BoundsRow row;
  row.n = n;
  row.lower = sd_lower_bound(n);
  row.upper = sd_upper_bound(n);
  if (n >= 3) {
    row.t = (n - 3) / 7;
    row.k = (n - 3) % 7;
  }
  return row;
}

bool ConstructionReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ConstructionReport verify_construction(int n_max, bool check_equality, unsigned workers) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  if (n_max > kConstructionMaxN) {
    throw LengthBudgetExceeded(static_cast<std::size_t>(n_max), kConstructionMaxN);
  }
  ConstructionReport report;
  report.equality_checked = check_equality;
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& [alpha, beta] : kConstructionPairs) {
      ConstructionCheck check;
      check.params = {n, alpha, beta};
      check.length = check.params.length();
      check.bound = construction_bound(check.params);
      report.checks.push_back(check);
    }
  }

  // Each worker owns a strided subset of the slots.
  auto evaluate = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < report.checks.size(); i += stride) {
      ConstructionCheck& c = report.checks[i];
      c.computed = sd(build_word(c.params)).value;
      c.passed = check_equality ? c.computed == c.bound : c.computed >= c.bound;
    }
  };
  const std::size_t stride = std::max(1U, workers);
  {
    std::vector<std::jthread> threads;
    for (std::size_t w = 1; w < stride; ++w) threads.emplace_back(evaluate, w, stride);
    evaluate(0, stride);
  }
  return report;
}

}  // namespace palsym

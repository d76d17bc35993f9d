#include "palsym/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <string>
#include <thread>

#include "palsym/bounds.hpp"
#include "palsym/errors.hpp"

namespace palsym {
namespace {

struct Partial {
  int best = -1;
  std::vector<std::uint64_t> extremal;  // ascending, at most `limit` entries
  std::uint64_t scanned = 0;
};

void offer(Partial& part, int value, std::uint64_t word, std::size_t limit) {
  if (value > part.best) {
    part.best = value;
    part.extremal.clear();
  }
  if (value == part.best && part.extremal.size() < limit) part.extremal.push_back(word);
}

// Scans [begin, end) in increasing order, so extremal lists come out sorted.
void scan_range(std::uint64_t begin, std::uint64_t end, std::size_t n, const SearchConfig& config,
                std::atomic<std::uint64_t>& progress, Partial& part) {
  constexpr std::size_t kBatch = 4096;
  std::vector<std::uint64_t> batch;
  std::vector<std::uint8_t> values(kBatch);
  batch.reserve(kBatch);

  auto flush = [&] {
    sd_batch(config.kernel, batch, n, std::span(values.data(), batch.size()));
    for (std::size_t i = 0; i < batch.size(); ++i) {
      offer(part, values[i], batch[i], config.extremal_limit);
    }
    part.scanned += batch.size();
    batch.clear();
  };

  std::uint64_t since_report = 0;
  for (std::uint64_t w = begin; w < end; ++w) {
    if (!config.prune || bits::is_canonical(w, n)) {
      batch.push_back(w);
      if (batch.size() == kBatch) flush();
    }
    if (++since_report == (1U << 16)) {
      progress.fetch_add(since_report, std::memory_order_relaxed);
      since_report = 0;
    }
  }
  if (!batch.empty()) flush();
  progress.fetch_add(since_report, std::memory_order_relaxed);
}

}  // namespace

SdTableRow sd_max(std::size_t n, const SearchConfig& config) {
  if (n == 0) throw DomainError("sd_max: n must be positive");
  if (n > config.max_length || n > Word::kMaxLength) {
    throw LengthBudgetExceeded(n, std::min(config.max_length, Word::kMaxLength));
  }
  if (config.worker_count == 0) throw DomainError("sd_max: worker_count must be at least 1");
  if (!kernel_available(config.kernel)) {
    throw DomainError("kernel '" + std::string(kernel_name(config.kernel)) + "' is not available");
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  // Only the first half of the integers can be canonical (complement of a
  // word starting with b is smaller), so pruned scans stop at 2^(n-1).
  const std::uint64_t end = config.prune ? total / 2 : total;
  const std::uint64_t workers = std::min<std::uint64_t>(config.worker_count, end);

  std::vector<Partial> partials(workers);
  std::atomic<std::uint64_t> progress{0};
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::uint64_t k = 0; k < workers; ++k) {
      const std::uint64_t lo = end * k / workers;
      const std::uint64_t hi = end * (k + 1) / workers;
      threads.emplace_back([&, lo, hi, k] { scan_range(lo, hi, n, config, progress, partials[k]); });
    }
    if (config.progress_interval && config.on_progress) {
      while (progress.load(std::memory_order_relaxed) < end) {
        std::this_thread::sleep_for(*config.progress_interval);
        config.on_progress(progress.load(std::memory_order_relaxed), end);
      }
    }
  }

  SdTableRow row;
  row.n = n;
  row.upper = sd_upper_bound(static_cast<int>(n));
  if (n >= 2) row.lower = sd_lower_bound(static_cast<int>(n));

  // Ranges are contiguous and ascending, so concatenating in worker order
  // keeps every candidate list sorted.
  int best = -1;
  for (const Partial& part : partials) best = std::max(best, part.best);
  row.sd_n = best;
  for (const Partial& part : partials) {
    row.words_scanned += part.scanned;
    if (part.best != best) continue;
    for (std::uint64_t w : part.extremal) {
      if (row.extremal.size() == config.extremal_limit) break;
      row.extremal.push_back(Word::from_bits(w, n));
    }
  }
  return row;
}

std::vector<SdTableRow> compute_table(std::size_t n_min, std::size_t n_max,
                                      const SearchConfig& config) {
  if (n_min == 0 || n_min > n_max) throw DomainError("compute_table: need 1 <= from <= to");
  if (n_max > config.max_length) throw LengthBudgetExceeded(n_max, config.max_length);
  std::vector<SdTableRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) rows.push_back(sd_max(n, config));
  return rows;
}

const std::map<std::size_t, int>& reference_table() {
  static const std::map<std::size_t, int> table = [] {
    constexpr std::array<int, 20> values{0, 0, 1, 1, 1, 2, 2, 2, 3, 4,
                                         4, 4, 5, 5, 5, 6, 7, 7, 7, 8};
    std::map<std::size_t, int> m;
    for (std::size_t n = 1; n <= values.size(); ++n) m.emplace(n, values[n - 1]);
    return m;
  }();
  return table;
}

std::vector<TableMismatch> compare_with_reference(const std::vector<SdTableRow>& rows) {
  std::vector<TableMismatch> out;
  const auto& table = reference_table();
  for (const SdTableRow& row : rows) {
    const auto it = table.find(row.n);
    if (it != table.end() && it->second != row.sd_n) out.push_back({row.n, it->second, row.sd_n});
  }
  return out;
}

}  // namespace palsym

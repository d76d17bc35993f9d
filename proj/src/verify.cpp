#include "palsym/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "palsym/bounds.hpp"
#include "palsym/errors.hpp"
#include "palsym/game.hpp"
#include "palsym/subseq.hpp"

namespace palsym {
namespace {

constexpr std::array<Suite, 6> kSuites{Suite::Construction,  Suite::Bounds,     Suite::Oracle,
                                       Suite::Peeling, Suite::Invariance, Suite::Game};

// Exhaustive lengths for the oracle suite; longer lengths are sampled.
constexpr std::size_t kOracleExhaustive = 14;

struct Params : VerifyOptions {
  Params(const VerifyOptions& base, std::size_t n) : VerifyOptions(base), max_n(n) {}
  std::size_t max_n;
};

std::string describe(const Word& w) { return w.empty() ? "(empty)" : w.str(); }

template <class Pred>
CheckLine all_words(std::string name, std::size_t n_min, std::size_t n_max, Pred pred) {
  std::uint64_t count = 0;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const Word w = Word::from_bits(b, n);
      ++count;
      if (!pred(w)) return {std::move(name), false, "counterexample " + describe(w)};
    }
  }
  return {std::move(name), true, std::to_string(count) + " words"};
}

SuiteReport construction(const Params& o) {
  SuiteReport r{Suite::Construction, {}};
  const auto report = verify_construction(static_cast<int>(o.max_n), o.check_equality,
                                          o.search.worker_count);
  for (const auto& c : report.checks) {
    std::ostringstream name;
    name << "w(" << c.params.n << "," << c.params.alpha << "," << c.params.beta << ")";
    std::ostringstream detail;
    detail << "length " << c.length << ", S_d " << c.computed << (o.check_equality ? " == " : " >= ")
           << c.bound;
    r.lines.push_back({name.str(), c.passed, detail.str()});
  }
  return r;
}

SuiteReport bounds(const Params& o) {
  SuiteReport r{Suite::Bounds, {}};
  const auto& reference = reference_table();
  for (std::size_t n = 2; n <= o.max_n; ++n) {
    const SdTableRow row = sd_max(n, o.search);
    const int lo = sd_lower_bound(static_cast<int>(n));
    const int hi = sd_upper_bound(static_cast<int>(n));
    std::ostringstream detail;
    detail << lo << " <= " << row.sd_n << " <= " << hi;
    r.lines.push_back({"bounds n=" + std::to_string(n), lo <= row.sd_n && row.sd_n <= hi,
                       detail.str()});
    if (reference.contains(n)) {
      r.lines.push_back({"lower bound exact n=" + std::to_string(n), row.sd_n == lo,
                         "S_d(n) = " + std::to_string(row.sd_n) + ", lower " + std::to_string(lo)});
    }
  }
  return r;
}

SuiteReport oracle(const Params& o) {
  SuiteReport r{Suite::Oracle, {}};
  const std::size_t exhaustive = std::min(o.max_n, kOracleExhaustive);
  r.lines.push_back(all_words("dp == brute force, lengths 0.." + std::to_string(exhaustive), 0,
                              exhaustive,
                              [](const Word& w) { return sd(w).value == brute_force_sd(w); }));
  std::mt19937_64 rng(o.seed);
  for (std::size_t n = exhaustive + 1; n <= o.max_n; ++n) {
    std::uniform_int_distribution<std::uint64_t> dist(0, bits::low_mask(n));
    CheckLine line{"dp == brute force, " + std::to_string(o.random_samples) +
                       " random words of length " + std::to_string(n),
                   true, "ok"};
    for (std::size_t s = 0; s < o.random_samples; ++s) {
      const Word w = Word::from_bits(dist(rng), n);
      if (sd(w).value != brute_force_sd(w)) {
        line = {line.name, false, "counterexample " + describe(w)};
        break;
      }
    }
    r.lines.push_back(line);
  }
  return r;
}

SuiteReport peeling(const Params& o) {
  SuiteReport r{Suite::Peeling, {}};
  r.lines.push_back(all_words("equal ends: lps(w) = 2 + lps(inner)", 2, o.max_n, [](const Word& w) {
    return w[0] != w[w.size() - 1] || lps_length(w) == 2 + lps_length(w.inner());
  }));
  r.lines.push_back(all_words("distinct ends: las(w) = 2 + las(inner)", 2, o.max_n,
                              [](const Word& w) {
                                return w[0] == w[w.size() - 1] ||
                                       las_length(w) == 2 + las_length(w.inner());
                              }));
  return r;
}

SuiteReport invariance(const Params& o) {
  SuiteReport r{Suite::Invariance, {}};
  r.lines.push_back(all_words("S_d invariant under reversal and complement", 0, o.max_n,
                              [](const Word& w) {
                                const int v = sd(w).value;
                                return sd(reverse(w)).value == v && sd(complement(w)).value == v;
                              }));
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    SearchConfig pruned = o.search;
    pruned.prune = true;
    SearchConfig full = o.search;
    full.prune = false;
    const int a = sd_max(n, pruned).sd_n;
    const int b = sd_max(n, full).sd_n;
    r.lines.push_back({"pruned scan == full scan n=" + std::to_string(n), a == b,
                       std::to_string(a) + " vs " + std::to_string(b)});
  }
  return r;
}

SuiteReport game(const Params& o) {
  SuiteReport r{Suite::Game, {}};
  GameSolver solver;
  for (std::size_t n = 6; n <= o.max_n; ++n) {
    const int target = static_cast<int>(n) - 4;
    const Word w = strategy_word(static_cast<int>(n));
    const int v = solver.value(w);
    r.lines.push_back({"value(" + w.str() + ") >= " + std::to_string(target), v >= target,
                       "value " + std::to_string(v)});
    const BestWord best = first_player_gain(n);
    r.lines.push_back({"g1(" + std::to_string(n) + ") >= " + std::to_string(target),
                       best.value >= target,
                       "g1 " + std::to_string(best.value) + " via " + best.word.str()});
  }
  const std::size_t cap = std::min<std::size_t>(o.max_n, 10);
  r.lines.push_back(all_words("value(w) <= max(0, |w| - 2)", 0, cap, [&](const Word& w) {
    return solver.value(w) <= std::max(0, static_cast<int>(w.size()) - 2);
  }));
  return r;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite s : kSuites) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::Construction: return "lemma4";
    case Suite::Bounds: return "bounds";
    case Suite::Oracle: return "oracle";
    case Suite::Peeling: return "peeling";
    case Suite::Invariance: return "invariance";
    case Suite::Game: return "game";
  }
  return "lemma4";
}

std::size_t default_max_n(Suite s) noexcept {
  switch (s) {
    case Suite::Construction: return 4;
    case Suite::Bounds: return 20;
    case Suite::Oracle: return 14;
    case Suite::Peeling: return 14;
    case Suite::Invariance: return 12;
    case Suite::Game: return 10;
  }
  return 0;
}

std::size_t max_n_limit(Suite s) noexcept {
  switch (s) {
    case Suite::Construction: return kConstructionMaxN;
    case Suite::Bounds: return kDefaultSearchLimit;
    case Suite::Oracle: return kBruteForceLimit;
    case Suite::Peeling: return 22;
    case Suite::Invariance: return 20;
    case Suite::Game: return kBestWordLimit;
  }
  return 0;
}

bool SuiteReport::passed() const noexcept {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

SuiteReport run_suite(Suite suite, const VerifyOptions& options) {
  Params o{options, options.max_n.value_or(default_max_n(suite))};
  if (o.max_n > max_n_limit(suite)) throw LengthBudgetExceeded(o.max_n, max_n_limit(suite));
  switch (suite) {
    case Suite::Construction: return construction(o);
    case Suite::Bounds: return bounds(o);
    case Suite::Oracle: return oracle(o);
    case Suite::Peeling: return peeling(o);
    case Suite::Invariance: return invariance(o);
    case Suite::Game: return game(o);
  }
  return {};
}

}  // namespace palsym

#include "palsym/subseq.hpp"

#include <algorithm>
#include <cstdint>

#include "palsym/errors.hpp"

namespace palsym {
namespace {

// Interval tables over half-open windows [i, e). Both are filled in one pass
// by increasing window length.
class IntervalTables {
 public:
  explicit IntervalTables(const Word& w)
      : n_(w.size()), pal_((n_ + 1) * (n_ + 1), 0), anti_((n_ + 1) * (n_ + 1), 0) {
    for (std::size_t i = 0; i < n_; ++i) pal_[at(i, i + 1)] = 1;
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t e = i + len;
        const bool same = w[i] == w[e - 1];
        const std::uint8_t p_in = pal_[at(i + 1, e - 1)];
        const std::uint8_t a_in = anti_[at(i + 1, e - 1)];
        pal_[at(i, e)] = std::max({pal_[at(i + 1, e)], pal_[at(i, e - 1)],
                                   same ? static_cast<std::uint8_t>(p_in + 2) : std::uint8_t{0}});
        anti_[at(i, e)] = std::max({anti_[at(i + 1, e)], anti_[at(i, e - 1)],
                                    same ? std::uint8_t{0} : static_cast<std::uint8_t>(a_in + 2)});
      }
    }
  }

  int pal(std::size_t i, std::size_t e) const { return pal_[at(i, e)]; }
  int anti(std::size_t i, std::size_t e) const { return anti_[at(i, e)]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t at(std::size_t i, std::size_t e) const { return i * (n_ + 1) + e; }

  std::size_t n_;
  std::vector<std::uint8_t> pal_;
  std::vector<std::uint8_t> anti_;
};

}  // namespace

int lps_length(const Word& w) { return IntervalTables(w).pal(0, w.size()); }

int las_length(const Word& w) { return IntervalTables(w).anti(0, w.size()); }

SdValue sd(const Word& w) {
  const IntervalTables t(w);
  const int lps = t.pal(0, w.size());
  const int las = t.anti(0, w.size());
  return {static_cast<int>(w.size()) - std::max(lps, las), lps, las};
}

DeletionWitness sd_witness(const Word& w) {
  const IntervalTables t(w);
  const std::size_t n = w.size();
  const bool palindrome = t.pal(0, n) >= t.anti(0, n);
  auto table = [&](std::size_t i, std::size_t e) {
    return palindrome ? t.pal(i, e) : t.anti(i, e);
  };

  DeletionWitness out;
  out.target = palindrome ? TargetKind::Palindrome : TargetKind::Antipalindrome;
  std::vector<bool> keep(n, false);
  std::size_t i = 0;
  std::size_t e = n;
  while (e > i) {
    if (e - i == 1 && palindrome) {
      keep[i] = true;
      break;
    }
    const bool pair_ok = (w[i] == w[e - 1]) == palindrome;
    const int here = table(i, e);
    if (e - i >= 2 && pair_ok && here == 2 + table(i + 1, e - 1)) {
      keep[i] = keep[e - 1] = true;
      ++i;
      --e;
    } else if (here == table(i, e - 1)) {
      --e;
    } else {
      ++i;
    }
  }

  std::uint64_t residual = 0;
  std::size_t kept = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (keep[p]) {
      residual = (residual << 1) | static_cast<std::uint64_t>(w[p]);
      ++kept;
    } else {
      out.deleted_positions.push_back(p + 1);
    }
  }
  out.residual = Word::from_bits(residual, kept);
  return out;
}

int brute_force_sd(const Word& w) {
  const std::size_t n = w.size();
  if (n > kBruteForceLimit) throw LengthBudgetExceeded(n, kBruteForceLimit);
  const std::uint64_t full = bits::low_mask(n);
  for (std::size_t keep = n;; --keep) {
    // Gosper's hack over all n-bit masks with `keep` bits set.
    std::uint64_t mask = bits::low_mask(keep);
    while (mask <= full) {
      std::uint64_t packed = 0;
      for (std::size_t b = n; b-- > 0;) {
        if ((mask >> b) & 1U) packed = (packed << 1) | ((w.bits() >> b) & 1U);
      }
      if (is_symmetric(Word::from_bits(packed, keep))) return static_cast<int>(n - keep);
      if (mask == 0) break;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
}

}  // namespace palsym

#include <algorithm>
#include <array>

#include "palsym/kernels.hpp"

namespace palsym::detail {

// Rolling-row form of the interval recurrence: only window lengths L-1 and
// L-2 are needed to produce length L.
void sd_batch_scalar(const std::uint64_t* words, std::size_t count, std::size_t length,
                     std::uint8_t* out) {
  const std::size_t n = length;
  std::array<std::uint8_t, 64> letters{};
  std::array<std::array<std::uint8_t, 65>, 3> pal{};
  std::array<std::array<std::uint8_t, 65>, 3> anti{};

  for (std::size_t w = 0; w < count; ++w) {
    if (n == 0) {
      out[w] = 0;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) letters[i] = (words[w] >> (n - 1 - i)) & 1U;

    auto* p2 = pal[0].data();
    auto* p1 = pal[1].data();
    auto* p0 = pal[2].data();
    auto* a2 = anti[0].data();
    auto* a1 = anti[1].data();
    auto* a0 = anti[2].data();
    std::fill_n(p2, n + 1, 0);
    std::fill_n(a2, n + 1, 0);
    std::fill_n(p1, n, 1);
    std::fill_n(a1, n, 0);

    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const bool same = letters[i] == letters[i + len - 1];
        const std::uint8_t keep_p = same ? p2[i + 1] + 2 : 0;
        const std::uint8_t keep_a = same ? 0 : a2[i + 1] + 2;
        p0[i] = std::max({p1[i], p1[i + 1], keep_p});
        a0[i] = std::max({a1[i], a1[i + 1], keep_a});
      }
      std::swap(p2, p1);
      std::swap(p1, p0);
      std::swap(a2, a1);
      std::swap(a1, a0);
    }
    out[w] = static_cast<std::uint8_t>(n - std::max(p1[0], a1[0]));
  }
}

}  // namespace palsym::detail

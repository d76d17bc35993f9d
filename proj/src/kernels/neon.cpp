#include "palsym/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include <algorithm>
#include <cstring>

namespace palsym::detail {

void sd_batch_neon(const std::uint64_t* words, std::size_t count, std::size_t n,
                   std::uint8_t* out) {
  constexpr std::size_t kLanes = 16;
  if (n == 0) {
    std::fill_n(out, count, 0);
    return;
  }
  std::uint8_t letters[64 * kLanes];
  std::uint8_t best[kLanes];
  uint8x16_t pal[3][65];
  uint8x16_t anti[3][65];
  const uint8x16_t zero = vdupq_n_u8(0);
  const uint8x16_t one = vdupq_n_u8(1);
  const uint8x16_t two = vdupq_n_u8(2);

  for (std::size_t base = 0; base < count; base += kLanes) {
    const std::size_t lanes = std::min(kLanes, count - base);
    std::memset(letters, 0, n * kLanes);
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      const std::uint64_t w = words[base + lane];
      for (std::size_t i = 0; i < n; ++i) {
        letters[i * kLanes + lane] = static_cast<std::uint8_t>(-((w >> (n - 1 - i)) & 1U));
      }
    }

    uint8x16_t* p2 = pal[0];
    uint8x16_t* p1 = pal[1];
    uint8x16_t* p0 = pal[2];
    uint8x16_t* a2 = anti[0];
    uint8x16_t* a1 = anti[1];
    uint8x16_t* a0 = anti[2];
    for (std::size_t i = 0; i <= n; ++i) p2[i] = a2[i] = a1[i] = zero;
    for (std::size_t i = 0; i < n; ++i) p1[i] = one;

    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const uint8x16_t differ =
            veorq_u8(vld1q_u8(letters + i * kLanes), vld1q_u8(letters + (i + len - 1) * kLanes));
        const uint8x16_t keep_p = vbicq_u8(vaddq_u8(p2[i + 1], two), differ);
        const uint8x16_t keep_a = vandq_u8(vaddq_u8(a2[i + 1], two), differ);
        p0[i] = vmaxq_u8(vmaxq_u8(p1[i], p1[i + 1]), keep_p);
        a0[i] = vmaxq_u8(vmaxq_u8(a1[i], a1[i + 1]), keep_a);
      }
      std::swap(p2, p1);
      std::swap(p1, p0);
      std::swap(a2, a1);
      std::swap(a1, a0);
    }
    vst1q_u8(best, vmaxq_u8(p1[0], a1[0]));
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      out[base + lane] = static_cast<std::uint8_t>(n - best[lane]);
    }
  }
}

}  // namespace palsym::detail

#endif

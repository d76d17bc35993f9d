// x86 batch kernels. Each kernel carries its own target attribute so this
// translation unit builds without ISA flags and is only entered after the
// runtime CPU check in dispatch.cpp.

#include "palsym/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>
#include <cstring>

namespace palsym::detail {
namespace {

// Transposes up to `lanes` packed words into per-position byte masks:
// letters[i * lanes + lane] is 0xFF when letter i of that word is b.
// Lanes past `count` are padded with the all-a word.
void transpose_letters(const std::uint64_t* words, std::size_t count, std::size_t n,
                       std::size_t lanes, std::uint8_t* letters) {
  std::memset(letters, 0, n * lanes);
  for (std::size_t lane = 0; lane < count; ++lane) {
    const std::uint64_t w = words[lane];
    for (std::size_t i = 0; i < n; ++i) {
      letters[i * lanes + lane] = static_cast<std::uint8_t>(-((w >> (n - 1 - i)) & 1U));
    }
  }
}

void finish(const std::uint8_t* best, std::size_t count, std::size_t n, std::uint8_t* out) {
  for (std::size_t lane = 0; lane < count; ++lane) {
    out[lane] = static_cast<std::uint8_t>(n - best[lane]);
  }
}

}  // namespace

void sd_batch_sse2(const std::uint64_t* words, std::size_t count, std::size_t n,
                   std::uint8_t* out) {
  constexpr std::size_t kLanes = 16;
  if (n == 0) {
    std::fill_n(out, count, 0);
    return;
  }
  alignas(16) std::uint8_t letters[64 * kLanes];
  alignas(16) std::uint8_t best[kLanes];
  __m128i pal[3][65];
  __m128i anti[3][65];
  const __m128i zero = _mm_setzero_si128();
  const __m128i one = _mm_set1_epi8(1);
  const __m128i two = _mm_set1_epi8(2);

  for (std::size_t base = 0; base < count; base += kLanes) {
    const std::size_t lanes = std::min(kLanes, count - base);
    transpose_letters(words + base, lanes, n, kLanes, letters);

    __m128i* p2 = pal[0];
    __m128i* p1 = pal[1];
    __m128i* p0 = pal[2];
    __m128i* a2 = anti[0];
    __m128i* a1 = anti[1];
    __m128i* a0 = anti[2];
    for (std::size_t i = 0; i <= n; ++i) p2[i] = a2[i] = a1[i] = zero;
    for (std::size_t i = 0; i < n; ++i) p1[i] = one;

    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const __m128i li = _mm_load_si128(reinterpret_cast<const __m128i*>(letters + i * kLanes));
        const __m128i lj = _mm_load_si128(
            reinterpret_cast<const __m128i*>(letters + (i + len - 1) * kLanes));
        const __m128i differ = _mm_xor_si128(li, lj);
        const __m128i keep_p = _mm_andnot_si128(differ, _mm_add_epi8(p2[i + 1], two));
        const __m128i keep_a = _mm_and_si128(differ, _mm_add_epi8(a2[i + 1], two));
        p0[i] = _mm_max_epu8(_mm_max_epu8(p1[i], p1[i + 1]), keep_p);
        a0[i] = _mm_max_epu8(_mm_max_epu8(a1[i], a1[i + 1]), keep_a);
      }
      std::swap(p2, p1);
      std::swap(p1, p0);
      std::swap(a2, a1);
      std::swap(a1, a0);
    }
    _mm_store_si128(reinterpret_cast<__m128i*>(best), _mm_max_epu8(p1[0], a1[0]));
    finish(best, lanes, n, out + base);
  }
}

__attribute__((target("avx2"))) void sd_batch_avx2(const std::uint64_t* words,
                                                    std::size_t count, std::size_t n,
                                                    std::uint8_t* out) {
  constexpr std::size_t kLanes = 32;
  if (n == 0) {
    std::fill_n(out, count, 0);
    return;
  }
  alignas(32) std::uint8_t letters[64 * kLanes];
  alignas(32) std::uint8_t best[kLanes];
  __m256i pal[3][65];
  __m256i anti[3][65];
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  const __m256i two = _mm256_set1_epi8(2);

  for (std::size_t base = 0; base < count; base += kLanes) {
    const std::size_t lanes = std::min(kLanes, count - base);
    transpose_letters(words + base, lanes, n, kLanes, letters);

    __m256i* p2 = pal[0];
    __m256i* p1 = pal[1];
    __m256i* p0 = pal[2];
    __m256i* a2 = anti[0];
    __m256i* a1 = anti[1];
    __m256i* a0 = anti[2];
    for (std::size_t i = 0; i <= n; ++i) p2[i] = a2[i] = a1[i] = zero;
    for (std::size_t i = 0; i < n; ++i) p1[i] = one;

    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const __m256i li =
            _mm256_load_si256(reinterpret_cast<const __m256i*>(letters + i * kLanes));
        const __m256i lj = _mm256_load_si256(
            reinterpret_cast<const __m256i*>(letters + (i + len - 1) * kLanes));
        const __m256i differ = _mm256_xor_si256(li, lj);
        const __m256i keep_p = _mm256_andnot_si256(differ, _mm256_add_epi8(p2[i + 1], two));
        const __m256i keep_a = _mm256_and_si256(differ, _mm256_add_epi8(a2[i + 1], two));
        p0[i] = _mm256_max_epu8(_mm256_max_epu8(p1[i], p1[i + 1]), keep_p);
        a0[i] = _mm256_max_epu8(_mm256_max_epu8(a1[i], a1[i + 1]), keep_a);
      }
      std::swap(p2, p1);
      std::swap(p1, p0);
      std::swap(a2, a1);
      std::swap(a1, a0);
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(best), _mm256_max_epu8(p1[0], a1[0]));
    finish(best, lanes, n, out + base);
  }
}

__attribute__((target("avx512f,avx512bw"))) void sd_batch_avx512(const std::uint64_t* words,
                                                                  std::size_t count,
                                                                  std::size_t n,
                                                                  std::uint8_t* out) {
  constexpr std::size_t kLanes = 64;
  if (n == 0) {
    std::fill_n(out, count, 0);
    return;
  }
  alignas(64) std::uint8_t letters[64 * kLanes];
  alignas(64) std::uint8_t best[kLanes];
  __m512i pal[3][65];
  __m512i anti[3][65];
  const __m512i zero = _mm512_setzero_si512();
  const __m512i one = _mm512_set1_epi8(1);
  const __m512i two = _mm512_set1_epi8(2);

  for (std::size_t base = 0; base < count; base += kLanes) {
    const std::size_t lanes = std::min(kLanes, count - base);
    transpose_letters(words + base, lanes, n, kLanes, letters);

    __m512i* p2 = pal[0];
    __m512i* p1 = pal[1];
    __m512i* p0 = pal[2];
    __m512i* a2 = anti[0];
    __m512i* a1 = anti[1];
    __m512i* a0 = anti[2];
    for (std::size_t i = 0; i <= n; ++i) p2[i] = a2[i] = a1[i] = zero;
    for (std::size_t i = 0; i < n; ++i) p1[i] = one;

    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const __m512i li = _mm512_load_si512(letters + i * kLanes);
        const __m512i lj = _mm512_load_si512(letters + (i + len - 1) * kLanes);
        const __mmask64 differ = _mm512_cmpneq_epi8_mask(li, lj);
        const __m512i keep_p = _mm512_maskz_add_epi8(~differ, p2[i + 1], two);
        const __m512i keep_a = _mm512_maskz_add_epi8(differ, a2[i + 1], two);
        p0[i] = _mm512_max_epu8(_mm512_max_epu8(p1[i], p1[i + 1]), keep_p);
        a0[i] = _mm512_max_epu8(_mm512_max_epu8(a1[i], a1[i + 1]), keep_a);
      }
      std::swap(p2, p1);
      std::swap(p1, p0);
      std::swap(a2, a1);
      std::swap(a1, a0);
    }
    _mm512_store_si512(best, _mm512_max_epu8(p1[0], a1[0]));
    finish(best, lanes, n, out + base);
  }
}

}  // namespace palsym::detail

#endif

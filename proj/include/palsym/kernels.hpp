#pragma once

// Batch S_d kernels used by the exhaustive scans.
//
// Every kernel evaluates the same interval recurrence as sd() for many words
// of one common length at once; the SIMD variants put one word in each byte
// lane. The scalar kernel is the reference the others are tested against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace palsym {

enum class Kernel { Scalar, Sse2, Avx2, Avx512, Neon };

std::string_view kernel_name(Kernel k) noexcept;
std::optional<Kernel> parse_kernel(std::string_view name) noexcept;

/// Compiled in and supported by the running CPU.
bool kernel_available(Kernel k) noexcept;
std::vector<Kernel> available_kernels();
/// Widest available kernel.
Kernel best_kernel() noexcept;
std::size_t kernel_lanes(Kernel k) noexcept;

/// out[i] = S_d of the packed word words[i] of the given length (<= 63).
/// Throws DomainError if the kernel is unavailable or the spans differ in size.
void sd_batch(Kernel k, std::span<const std::uint64_t> words, std::size_t length,
              std::span<std::uint8_t> out);

namespace detail {

void sd_batch_scalar(const std::uint64_t* words, std::size_t count, std::size_t length,
                     std::uint8_t* out);
#if defined(__x86_64__) || defined(__i386__)
void sd_batch_sse2(const std::uint64_t* words, std::size_t count, std::size_t length,
                   std::uint8_t* out);
void sd_batch_avx2(const std::uint64_t* words, std::size_t count, std::size_t length,
                   std::uint8_t* out);
void sd_batch_avx512(const std::uint64_t* words, std::size_t count, std::size_t length,
                     std::uint8_t* out);
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
void sd_batch_neon(const std::uint64_t* words, std::size_t count, std::size_t length,
                   std::uint8_t* out);
#endif

}  // namespace detail
}  // namespace palsym

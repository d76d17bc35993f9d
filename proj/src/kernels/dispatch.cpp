#include <array>

#include "palsym/errors.hpp"
#include "palsym/kernels.hpp"

namespace palsym {
namespace {

constexpr std::array<Kernel, 5> kAllKernels{Kernel::Scalar, Kernel::Sse2, Kernel::Avx2,
                                            Kernel::Avx512, Kernel::Neon};

}  // namespace

std::string_view kernel_name(Kernel k) noexcept {
  switch (k) {
    case Kernel::Scalar: return "scalar";
    case Kernel::Sse2: return "sse2";
    case Kernel::Avx2: return "avx2";
    case Kernel::Avx512: return "avx512";
    case Kernel::Neon: return "neon";
  }
  return "scalar";
}

std::optional<Kernel> parse_kernel(std::string_view name) noexcept {
  for (Kernel k : kAllKernels) {
    if (kernel_name(k) == name) return k;
  }
  return std::nullopt;
}

bool kernel_available(Kernel k) noexcept {
  switch (k) {
    case Kernel::Scalar: return true;
#if defined(__x86_64__) || defined(__i386__)
    case Kernel::Sse2: return __builtin_cpu_supports("sse2");
    case Kernel::Avx2: return __builtin_cpu_supports("avx2");
    case Kernel::Avx512:
      return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512bw");
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    case Kernel::Neon: return true;
#endif
    default: return false;
  }
}

std::vector<Kernel> available_kernels() {
  std::vector<Kernel> out;
  for (Kernel k : kAllKernels) {
    if (kernel_available(k)) out.push_back(k);
  }
  return out;
}

Kernel best_kernel() noexcept {
  for (Kernel k : {Kernel::Avx512, Kernel::Avx2, Kernel::Neon, Kernel::Sse2}) {
    if (kernel_available(k)) return k;
  }
  return Kernel::Scalar;
}

std::size_t kernel_lanes(Kernel k) noexcept {
  switch (k) {
    case Kernel::Scalar: return 1;
    case Kernel::Sse2: return 16;
    case Kernel::Avx2: return 32;
    case Kernel::Avx512: return 64;
    case Kernel::Neon: return 16;
  }
  return 1;
}

void sd_batch(Kernel k, std::span<const std::uint64_t> words, std::size_t length,
              std::span<std::uint8_t> out) {
  if (words.size() != out.size()) throw DomainError("sd_batch: input and output sizes differ");
  if (length > 63) throw DomainError("sd_batch: word length above 63");
  if (!kernel_available(k)) {
    throw DomainError("kernel '" + std::string(kernel_name(k)) + "' is not available on this CPU");
  }
  switch (k) {
    case Kernel::Scalar:
      detail::sd_batch_scalar(words.data(), words.size(), length, out.data());
      return;
#if defined(__x86_64__) || defined(__i386__)
    case Kernel::Sse2:
      detail::sd_batch_sse2(words.data(), words.size(), length, out.data());
      return;
    case Kernel::Avx2:
      detail::sd_batch_avx2(words.data(), words.size(), length, out.data());
      return;
    case Kernel::Avx512:
      detail::sd_batch_avx512(words.data(), words.size(), length, out.data());
      return;
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    case Kernel::Neon:
      detail::sd_batch_neon(words.data(), words.size(), length, out.data());
      return;
#endif
    default:
      break;
  }
}

}  // namespace palsym

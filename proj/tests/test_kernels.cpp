#include <gtest/gtest.h>

#include <random>

#include "palsym/errors.hpp"
#include "palsym/kernels.hpp"
#include "palsym/subseq.hpp"

namespace palsym {
void PrintTo(Kernel k, std::ostream* os) { *os << kernel_name(k); }
}  // namespace palsym

using namespace palsym;

namespace {

std::vector<std::uint8_t> run(Kernel k, const std::vector<std::uint64_t>& words, std::size_t n) {
  std::vector<std::uint8_t> out(words.size(), 0xEE);
  sd_batch(k, words, n, out);
  return out;
}

class KernelEquivalence : public ::testing::TestWithParam<Kernel> {
 protected:
  void SetUp() override {
    if (!kernel_available(GetParam())) GTEST_SKIP() << kernel_name(GetParam()) << " unavailable";
  }
};

}  // namespace

TEST(KernelRegistry, NamesRoundTrip) {
  for (Kernel k : {Kernel::Scalar, Kernel::Sse2, Kernel::Avx2, Kernel::Avx512, Kernel::Neon}) {
    EXPECT_EQ(parse_kernel(kernel_name(k)), k);
  }
  EXPECT_FALSE(parse_kernel("mmx").has_value());
  EXPECT_TRUE(kernel_available(Kernel::Scalar));
  EXPECT_TRUE(kernel_available(best_kernel()));
  EXPECT_EQ(available_kernels().front(), Kernel::Scalar);
}

TEST(KernelRegistry, RejectsBadArguments) {
  std::vector<std::uint64_t> words(3);
  std::vector<std::uint8_t> out(2);
  EXPECT_THROW(sd_batch(Kernel::Scalar, words, 4, out), DomainError);
  out.resize(3);
  EXPECT_THROW(sd_batch(Kernel::Scalar, words, 64, out), DomainError);
}

TEST(ScalarKernel, MatchesReferenceDp) {
  for (std::size_t n = 0; n <= 12; ++n) {
    std::vector<std::uint64_t> words(std::size_t{1} << n);
    for (std::size_t b = 0; b < words.size(); ++b) words[b] = b;
    const auto out = run(Kernel::Scalar, words, n);
    for (std::size_t b = 0; b < words.size(); ++b) {
      ASSERT_EQ(out[b], sd(Word::from_bits(b, n)).value) << "n=" << n << " bits=" << b;
    }
  }
}

TEST_P(KernelEquivalence, ExhaustiveShortWords) {
  for (std::size_t n = 0; n <= 12; ++n) {
    std::vector<std::uint64_t> words(std::size_t{1} << n);
    for (std::size_t b = 0; b < words.size(); ++b) words[b] = b;
    ASSERT_EQ(run(GetParam(), words, n), run(Kernel::Scalar, words, n)) << "n=" << n;
  }
}

TEST_P(KernelEquivalence, RandomLongWordsAndRaggedTails) {
  std::mt19937_64 rng(42);
  for (std::size_t n : {13U, 20U, 31U, 32U, 47U, 62U, 63U}) {
    // Counts straddle every lane width to exercise partial batches.
    for (std::size_t count : {1U, 15U, 17U, 33U, 65U, 130U}) {
      std::vector<std::uint64_t> words(count);
      for (auto& x : words) x = rng() & bits::low_mask(n);
      ASSERT_EQ(run(GetParam(), words, n), run(Kernel::Scalar, words, n))
          << kernel_name(GetParam()) << " n=" << n << " count=" << count;
    }
  }
}

TEST_P(KernelEquivalence, EmptyBatch) {
  std::vector<std::uint64_t> words;
  EXPECT_TRUE(run(GetParam(), words, 10).empty());
}

INSTANTIATE_TEST_SUITE_P(AllKernels, KernelEquivalence,
                         ::testing::Values(Kernel::Scalar, Kernel::Sse2, Kernel::Avx2,
                                           Kernel::Avx512, Kernel::Neon),
                         [](const auto& info) { return std::string(kernel_name(info.param)); });

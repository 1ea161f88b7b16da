#include <gtest/gtest.h>

#include "appell/errors.hpp"
#include "appell/krank.hpp"

namespace {

using namespace appell;

TEST(Krank, ParamsValidation) {
  EXPECT_THROW(KrankParams(0, 1), InvalidParams);
  EXPECT_NO_THROW(KrankParams(1, -4));
}

TEST(Krank, RankExamples) {
  EXPECT_EQ(nk_series(KrankParams(2, 0), 4)[4], 1);
  EXPECT_EQ(nk_series(KrankParams(2, 3), 4)[4], 1);
  for (std::int64_t k = 1; k <= 4; ++k)
    for (std::int64_t m = -3; m <= 3; ++m)
      EXPECT_EQ(nk_series(KrankParams(k, m), 5)[0], m == 0 ? 1 : 0);
}

TEST(Krank, CrankSmallValues) {
  // k = 1 is the crank: M(0,1) = -1, M(+-1,1) = 1 in the generating function.
  EXPECT_EQ(nk_series(KrankParams(1, 0), 3)[1], -1);
  EXPECT_EQ(nk_series(KrankParams(1, 1), 3)[1], 1);
  EXPECT_EQ(nk_series(KrankParams(1, -1), 3)[1], 1);
}

TEST(Krank, SymmetricInM) {
  for (std::int64_t k = 1; k <= 3; ++k)
    for (std::int64_t m = 1; m <= 6; ++m)
      EXPECT_EQ(nk_series(KrankParams(k, m), 40), nk_series(KrankParams(k, -m), 40));
}

TEST(Oracle, Examples) {
  using H = std::map<std::int64_t, std::uint64_t>;
  EXPECT_EQ(dyson_rank_oracle(4), (H{{3, 1}, {1, 1}, {0, 1}, {-1, 1}, {-3, 1}}));
  EXPECT_EQ(dyson_rank_oracle(0), (H{{0, 1}}));
  std::uint64_t total = 0;
  for (const auto &[m, c] : dyson_rank_oracle(5))
    total += c;
  EXPECT_EQ(total, 7u);
  EXPECT_THROW(dyson_rank_oracle(kRankOracleBudget + 1), BudgetExceeded);
}

TEST(Oracle, MatchesGeneratingFunctionUpTo30) {
  const std::size_t order = 30;
  for (std::int64_t m = 0; m <= 30; ++m) {
    const TruncSeries s = nk_series(KrankParams(2, m), order);
    for (std::size_t n = static_cast<std::size_t>(m); n <= order; ++n) {
      const auto hist = dyson_rank_oracle(n);
      const auto it = hist.find(m);
      ASSERT_EQ(s[n], it == hist.end() ? 0ul : it->second) << m << "," << n;
    }
  }
}

TEST(Oracle, RowSumsArePartitionNumbers) {
  const TruncSeries p = invert_unit(pochhammer(1, 1, 25));
  for (std::size_t n = 0; n <= 25; ++n) {
    BigInt sum = 0;
    for (std::int64_t m = -25; m <= 25; ++m)
      sum += nk_series(KrankParams(2, m), 25)[n];
    EXPECT_EQ(sum, p[n]) << n;
    // N_2(l, n) = 0 beyond |l| = n.
    EXPECT_EQ(nk_series(KrankParams(2, static_cast<std::int64_t>(n) + 1), 25)[n], 0);
  }
}

TEST(Moments, Examples) {
  EXPECT_EQ(nk_dagger_series(KrankParams(2, 2), 4)[4], 4);
  EXPECT_EQ(nk_dagger_series(KrankParams(2, 2), 4)[0], 0);
  EXPECT_EQ(moment_sum(KrankParams(2, 2), 4, 4), 4);
  EXPECT_EQ(nk_dagger_series(KrankParams(1, 1), 3)[1],
            moment_sum(KrankParams(1, 1), 1, 3));
  EXPECT_EQ(nk_dagger_series(KrankParams(1, 1), 3)[1], 1);
  for (std::int64_t k = 1; k <= 3; ++k)
    EXPECT_EQ(moment_sum(KrankParams(k, k + 1), 0, 0), 0);
  EXPECT_THROW(nk_dagger_series(KrankParams(3, 1), 10), DomainError);
  EXPECT_THROW(moment_sum(KrankParams(2, 2), 5, 4), DomainError);
}

TEST(Moments, IdentityForRankUpTo30) {
  const KrankParams kp(2, 2);
  const TruncSeries dagger = nk_dagger_series(kp, 30);
  for (std::size_t n = 0; n <= 30; ++n)
    ASSERT_EQ(moment_sum(kp, n, 30), dagger[n]) << n;
}

TEST(Moments, RankMomentFromOracle) {
  // sum_{l >= 1} l N(l, n) straight from enumeration.
  const TruncSeries dagger = nk_dagger_series(KrankParams(2, 2), 20);
  for (std::size_t n = 0; n <= 20; ++n) {
    std::uint64_t want = 0;
    for (const auto &[m, c] : dyson_rank_oracle(n))
      if (m >= 1)
        want += static_cast<std::uint64_t>(m) * c;
    EXPECT_EQ(dagger[n], static_cast<unsigned long>(want)) << n;
  }
}

} // namespace

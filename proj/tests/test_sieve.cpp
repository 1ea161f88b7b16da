#include <random>

#include <gtest/gtest.h>

#include "appell/errors.hpp"
#include "appell/sieve.hpp"

namespace {

using namespace appell;

TEST(Table, Examples) {
  const HTable t = build_table(Params(1, 1), 8);
  EXPECT_EQ(t.counts, (std::vector<std::uint16_t>{0, 1, 1, 0, 1, 0, 2, 0, 1}));
  EXPECT_EQ(build_table(Params(0, 1), 0).counts, std::vector<std::uint16_t>{1});
  EXPECT_EQ(build_table(Params(2, 1), 0).counts, std::vector<std::uint16_t>{0});
}

TEST(Table, DenseAgreementWithDivisorCount) {
  for (std::int64_t m : {0, 1, 2, 7})
    for (std::int64_t k : {1, 3, 5}) {
      const Params p(m, k);
      const HTable t = build_table(p, 10000);
      for (std::uint64_t n = 0; n <= 10000; ++n)
        ASSERT_EQ(t.counts[n], h_divisor(p, n)) << m << "," << k << "," << n;
    }
}

TEST(Table, RandomAgreementAboveDenseRange) {
  std::mt19937_64 rng(23);
  const std::uint64_t x = 3000000;
  for (std::int64_t m : {1, 4})
    for (std::int64_t k : {1, 7}) {
      const Params p(m, k);
      const HTable t = build_table(p, x);
      for (int i = 0; i < 1000; ++i) {
        const std::uint64_t n = rng() % (x + 1);
        ASSERT_EQ(t.counts[n], h_divisor(p, n)) << n;
      }
    }
}

TEST(Table, ParallelEqualsSerialAcrossSegmentEdges) {
  for (std::uint64_t x : {kSegmentSize - 1, kSegmentSize, kSegmentSize + 1,
                          5 * kSegmentSize + 17})
    for (std::int64_t m : {0, 3})
      for (std::int64_t k : {1, 5}) {
        const Params p(m, k);
        ASSERT_EQ(build_table(p, x).counts, build_table_serial(p, x).counts);
      }
}

TEST(Table, DoublingHoldsTablewide) {
  const HTable t = build_table(Params(2, 3), 200000);
  for (std::uint64_t n = 0; 2 * n <= t.limit; ++n)
    ASSERT_GE(t.counts[2 * n], t.counts[n]) << n;
}

TEST(Table, CapacityGuard) {
  EXPECT_THROW(build_table(Params(1, 1), sieve_capacity()), CapacityExceeded);
}

TEST(Count, Examples) {
  const CountReport r = count_values(build_table(Params(1, 1), 8));
  EXPECT_EQ(r.at(0), 4u);
  EXPECT_EQ(r.at(1), 4u);
  EXPECT_EQ(r.at(2), 1u);
  EXPECT_EQ(r.at(3), 0u);
  EXPECT_EQ(r.total, 9u);

  const CountReport z = count_values(build_table(Params(1, 3), 0));
  EXPECT_EQ(z.at(0), 1u);
  EXPECT_EQ(z.histogram.size(), 1u);
}

TEST(Count, HistogramSumsToXPlusOne) {
  for (std::uint64_t x : {1u, 99u, 12345u}) {
    const CountReport r = count_values(build_table(Params(0, 5), x));
    std::uint64_t sum = 0;
    for (const auto &[ell, c] : r.histogram)
      sum += c;
    EXPECT_EQ(sum, x + 1);
  }
}

std::uint64_t brute_ford(std::uint64_t x, const Rational &y, const Rational &z) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n)
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0 && Rational(static_cast<std::int64_t>(d)) > y &&
          Rational(static_cast<std::int64_t>(d)) <= z) {
        ++count;
        break;
      }
  return count;
}

TEST(FordH, Examples) {
  EXPECT_EQ(ford_H(10, Rational(2), Rational(4)), 5u);
  EXPECT_EQ(ford_H(50, Rational(7), Rational(7)), 0u);
  EXPECT_EQ(ford_H(10, Rational(1, 2), Rational(1)), 10u);
  EXPECT_EQ(ford_H(0, Rational(0), Rational(5)), 0u);
  EXPECT_THROW(ford_H(10, Rational(3), Rational(2)), InvalidInterval);
  EXPECT_THROW(ford_H(10, Rational(-1), Rational(2)), InvalidInterval);
}

TEST(FordH, HalfIntegerEndpoints) {
  // (5/2, 7/2] holds only d = 3; (3, 7/2] holds nothing.
  EXPECT_EQ(ford_H(30, Rational(5, 2), Rational(7, 2)), 10u);
  EXPECT_EQ(ford_H(30, Rational(3), Rational(7, 2)), 0u);
  for (std::uint64_t x : {17u, 60u})
    EXPECT_EQ(ford_H(x, Rational(7, 3), Rational(23, 4)),
              brute_ford(x, Rational(7, 3), Rational(23, 4)));
}

TEST(FordH, MonotoneAndBounded) {
  std::uint64_t prev_z = 0;
  for (std::int64_t z = 3; z <= 40; ++z) {
    const std::uint64_t h = ford_H(500, Rational(3), Rational(z));
    EXPECT_GE(h, prev_z);
    EXPECT_LE(h, 500u);
    prev_z = h;
  }
  std::uint64_t prev_x = 0;
  for (std::uint64_t x = 0; x <= 400; x += 13) {
    const std::uint64_t h = ford_H(x, Rational(4), Rational(9));
    EXPECT_GE(h, prev_x);
    prev_x = h;
  }
  const std::uint64_t big = 3 * kSegmentSize + 5;
  EXPECT_EQ(ford_H(big, Rational(100), Rational(300)),
            ford_H_serial(big, Rational(100), Rational(300)));
}

TEST(Density, Examples) {
  const std::vector<std::uint64_t> cps{8};
  const auto rows = zero_density_scan(Params(1, 1), cps);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].zeros, 4u);
  EXPECT_DOUBLE_EQ(rows[0].ratio, 0.5);

  const std::vector<std::uint64_t> zero{0};
  const auto z = zero_density_scan(Params(3, 1), zero);
  EXPECT_EQ(z[0].zeros, 1u);
  EXPECT_DOUBLE_EQ(z[0].ratio, 1.0);

  const std::vector<std::uint64_t> unsorted{10, 5};
  EXPECT_THROW(zero_density_scan(Params(1, 1), unsorted), DomainError);
}

// Goldens from the first full run of the sieve (regression only).
TEST(Density, SlowGrowthGoldens) {
  const std::vector<std::uint64_t> cps{10000, 100000, 1000000};
  const auto rows = zero_density_scan(Params(1, 1), cps);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_GE(rows[i].ratio, rows[i - 1].ratio - 0.05);
  EXPECT_EQ(rows[0].zeros, 7069u);
  EXPECT_EQ(rows[1].zeros, 73131u);
  EXPECT_EQ(rows[2].zeros, 747245u);
}

} // namespace

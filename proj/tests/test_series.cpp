#include <functional>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "appell/errors.hpp"
#include "appell/series.hpp"

namespace {

using namespace appell;

TruncSeries from(std::size_t order, std::vector<long> cs) {
  std::vector<BigInt> v(cs.begin(), cs.end());
  return TruncSeries(order, std::move(v));
}

TruncSeries random_series(std::mt19937_64 &rng, std::size_t order) {
  std::uniform_int_distribution<long> d(-50, 50);
  TruncSeries s(order);
  for (std::size_t n = 0; n <= order; ++n)
    s[n] = d(rng);
  return s;
}

TEST(Series, AddCancelsAndKeepsIdentity) {
  EXPECT_EQ(add(from(5, {1, 1}), from(5, {1, -1})), from(5, {2}));
  const TruncSeries a = from(4, {3, -1, 0, 7});
  EXPECT_EQ(add(a, TruncSeries(4)), a);
  EXPECT_EQ(add(from(6, {0, 1, 1}), from(6, {0, 0, 0, 0, 1, 0, 2})),
            from(6, {0, 1, 1, 0, 1, 0, 2}));
}

TEST(Series, MixedOrdersTakeTheMinimum) {
  EXPECT_EQ(add(TruncSeries::one(3), TruncSeries::one(7)).order(), 3u);
  EXPECT_EQ(mul(TruncSeries::one(9), TruncSeries::one(2)).order(), 2u);
}

TEST(Series, MulBasics) {
  EXPECT_EQ(mul(from(5, {1, -1}), from(5, {1, 1, 1, 1, 1, 1})),
            TruncSeries::one(5));
  EXPECT_TRUE(mul(from(5, {4, 2}), TruncSeries(5)).is_zero());
  EXPECT_EQ(mul(from(3, {1, 1}), from(3, {1, 1})), from(3, {1, 2, 1}));
}

TEST(Series, InvertUnit) {
  EXPECT_EQ(invert_unit(from(4, {1, -1})), from(4, {1, 1, 1, 1, 1}));
  EXPECT_EQ(invert_unit(TruncSeries::one(6)), TruncSeries::one(6));
  // 1/(q;q)_inf: partition numbers p(0..5).
  EXPECT_EQ(invert_unit(pochhammer(1, 1, 5)), from(5, {1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(invert_unit(from(2, {-1, 1})), from(2, {-1, -1, -1}));
  EXPECT_THROW(invert_unit(from(3, {2, 1})), NonUnitConstantTerm);
  EXPECT_THROW(invert_unit(from(3, {0, 1})), NonUnitConstantTerm);
}

TEST(Series, PartitionNumbersAreLarge) {
  // p(1000) needs far more than 64 bits.
  const TruncSeries p = invert_unit(pochhammer(1, 1, 1000));
  EXPECT_EQ(p[1000].get_str(), "24061467864032622473692149727991");
}

TEST(Series, Pochhammer) {
  EXPECT_EQ(pochhammer(1, 1, 4), from(4, {1, -1, -1, 0, 0}));
  EXPECT_EQ(pochhammer(7, 1, 6), TruncSeries::one(6));
  EXPECT_EQ(pochhammer(3, 2, 6), from(6, {1, 0, 0, -1, 0, -1, 0}));
  EXPECT_THROW(pochhammer(0, 1, 4), InvalidExponent);
  EXPECT_THROW(pochhammer(1, 0, 4), InvalidExponent);
}

TEST(Series, Dilate) {
  EXPECT_EQ(dilate(from(4, {1, 1}), 2), from(4, {1, 0, 1}));
  const TruncSeries a = from(5, {2, -3, 4, 0, 1, 9});
  EXPECT_EQ(dilate(a, 1), a);
  EXPECT_EQ(dilate(from(6, {0, 1, 1}), 3), from(6, {0, 0, 0, 1, 0, 0, 1}));
  EXPECT_THROW(dilate(a, 0), InvalidExponent);
}

TEST(Series, Dump) {
  EXPECT_EQ(from(2, {0, -4, 1}).dump(), "0:0\n1:-4\n2:1\n");
}

TEST(SeriesProperty, RingLawsOnRandomSeries) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t order = 1 + rng() % 20;
    const TruncSeries a = random_series(rng, order);
    const TruncSeries b = random_series(rng, order);
    const TruncSeries c = random_series(rng, order);
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
  }
}

TEST(SeriesProperty, InverseAndDilation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t order = 1 + rng() % 25;
    TruncSeries a = random_series(rng, order);
    a[0] = (trial % 2) ? 1 : -1;
    EXPECT_EQ(mul(a, invert_unit(a)), TruncSeries::one(order));
    const auto d = static_cast<std::int64_t>(1 + rng() % 4);
    const TruncSeries da = dilate(a, d);
    for (std::size_t n = 0; n <= order; ++n) {
      if (n % d == 0)
        EXPECT_EQ(da[n], a[n / d]);
      else
        EXPECT_EQ(sgn(da[n]), 0);
    }
  }
}

// --- bivariate ---------------------------------------------------------

TEST(Bivar, GeomFactorByHand) {
  const BivarTriangle t = bivar_geom_factor(+1, 1, 1, 2);
  using Row = std::map<std::int64_t, BigInt>;
  EXPECT_EQ(t.row(0), (Row{{0, 1}}));
  EXPECT_EQ(t.row(1), (Row{{1, 1}}));
  EXPECT_EQ(t.row(2), (Row{{1, 1}, {2, 1}}));
}

// Brute-force 1/((1 - z^s q^a)(1 - z^s q^{a+step})...) by summing exponent
// vectors directly.
std::map<std::pair<std::size_t, std::int64_t>, long>
brute_geom_product(const std::vector<std::pair<int, std::size_t>> &factors,
                   std::size_t order) {
  std::map<std::pair<std::size_t, std::int64_t>, long> acc;
  std::function<void(std::size_t, std::size_t, std::int64_t)> rec =
      [&](std::size_t i, std::size_t qdeg, std::int64_t zdeg) {
        if (i == factors.size()) {
          ++acc[{qdeg, zdeg}];
          return;
        }
        const auto [zs, qe] = factors[i];
        for (std::size_t mult = 0; qdeg + mult * qe <= order; ++mult)
          rec(i + 1, qdeg + mult * qe, zdeg + zs * static_cast<std::int64_t>(mult));
      };
  rec(0, 0, 0);
  return acc;
}

TEST(Bivar, MulOfOppositeGeometricFactors) {
  const BivarTriangle a = bivar_geom_factor(+1, 1, 100, 2); // 1/(1 - zq)
  const BivarTriangle b = bivar_geom_factor(-1, 1, 100, 2); // 1/(1 - q/z)
  const BivarTriangle p = bivar_mul(a, b);
  const auto brute = brute_geom_product({{+1, 1}, {-1, 1}}, 2);
  EXPECT_EQ(p.at(2, 0), brute.at({2, 0}));
  EXPECT_EQ(p.at(2, 0), 1);
  EXPECT_EQ(p.at(2, 2), 1);
  EXPECT_EQ(p.at(2, -2), 1);
}

TEST(Bivar, GeomFactorsMatchBruteForce) {
  const std::size_t order = 9;
  const BivarTriangle prod = bivar_mul(bivar_geom_factor(+1, 2, 1, order),
                                       bivar_geom_factor(-1, 3, 2, order));
  std::vector<std::pair<int, std::size_t>> factors;
  for (std::size_t j = 2; j <= order; ++j)
    factors.push_back({+1, j});
  for (std::size_t j = 3; j <= order; j += 2)
    factors.push_back({-1, j});
  const auto brute = brute_geom_product(factors, order);
  for (std::size_t n = 0; n <= order; ++n)
    for (std::int64_t e = -static_cast<std::int64_t>(n);
         e <= static_cast<std::int64_t>(n); ++e) {
      const auto it = brute.find({n, e});
      EXPECT_EQ(prod.at(n, e), it == brute.end() ? 0 : it->second)
          << "n=" << n << " e=" << e;
    }
}

TEST(Bivar, OneIsIdentityAndRangeHolds) {
  const BivarTriangle g = bivar_geom_factor(-1, 1, 1, 6);
  EXPECT_EQ(bivar_mul(g, BivarTriangle::one(6)), g);
  EXPECT_EQ(bivar_mul(BivarTriangle::one(6), g), g);
}

TEST(Bivar, RangeInvariant) {
  BivarTriangle t(4);
  EXPECT_NO_THROW(t.at_mut(3, -3));
  EXPECT_THROW(t.at_mut(3, 4), std::out_of_range);
  EXPECT_EQ(t.at(2, 5), 0); // reads outside the triangle are zero
}

TEST(Bivar, ShiftedAddAndSlices) {
  BivarTriangle t = bivar_geom_factor(+1, 1, 1, 5);
  BivarTriangle acc(5);
  acc.add_shifted(t, 2);
  EXPECT_EQ(acc.at(2, 0), 1);
  EXPECT_EQ(acc.at(3, 1), 1);
  EXPECT_EQ(acc.z_slice(1), TruncSeries(5, {0, 0, 0, 1, 1, 1}));
  // z = 1: 1/(q;q)_inf shifted by q^2.
  EXPECT_EQ(acc.z_one(), mul(TruncSeries::monomial(2, 5),
                             invert_unit(pochhammer(1, 1, 5))));
}

TEST(Bivar, MultiplyByOneMinusQ) {
  const BivarTriangle before = bivar_geom_factor(-1, 2, 3, 8);
  BivarTriangle u = before;
  u.multiply_by_one_minus_q(4);
  EXPECT_EQ(u.z_one(), mul(before.z_one(), pochhammer(4, 100, 8)));
  EXPECT_THROW(u.divide_by_geometric(0, 1), InvalidExponent);
}

} // namespace

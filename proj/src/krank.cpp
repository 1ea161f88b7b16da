#include "appell/krank.hpp"

#include <string>
#include <vector>

#include "appell/errors.hpp"
#include "appell/halfappell.hpp"

namespace appell {

namespace {

TruncSeries partition_series(std::size_t order) {
  return invert_unit(pochhammer(1, 1, order));
}

} // namespace

KrankParams::KrankParams(std::int64_t k, std::int64_t m) : k_(k), m_(m) {
  if (k < 1)
    throw InvalidParams("k-rank needs k >= 1, got " + std::to_string(k));
}

TruncSeries nk_series(const KrankParams &kp, std::size_t order) {
  const auto limit = static_cast<std::int64_t>(order);
  const std::int64_t am = kp.m() < 0 ? -kp.m() : kp.m();
  const std::int64_t width = 2 * kp.k() - 1;
  TruncSeries numer(order);
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t e = n * (width * n - 1) / 2 + am * n;
    if (e > limit)
      break;
    const long sign = (n % 2 == 1) ? 1 : -1;
    numer[static_cast<std::size_t>(e)] += sign;
    if (e + n <= limit)
      numer[static_cast<std::size_t>(e + n)] -= sign;
  }
  TruncSeries s = mul(partition_series(order), numer);
  // The fixed-m formula counts partitions of n >= 1; the empty partition
  // has rank 0 for every k.
  s[0] = kp.m() == 0 ? 1 : 0;
  return s;
}

TruncSeries nk_dagger_series(const KrankParams &kp, std::size_t order) {
  if (kp.m() < kp.k() - 1)
    throw DomainError("nk_dagger_series: needs m >= k - 1 (m = " +
                      std::to_string(kp.m()) + ", k = " +
                      std::to_string(kp.k()) + ")");
  const auto limit = static_cast<std::int64_t>(order);
  const std::int64_t width = 2 * kp.k() - 1;
  TruncSeries theta(order);
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t e = width * n * (n - 1) / 2 + kp.m() * n;
    if (e > limit)
      break;
    theta[static_cast<std::size_t>(e)] += (n % 2 == 1) ? 1 : -1;
  }
  const TruncSeries half = h_series_direct(Params(kp.m(), width), order);
  const TruncSeries bracket = add(half, scale(theta, kp.m() - kp.k()));
  return mul(partition_series(order), bracket);
}

BigInt moment_sum(const KrankParams &kp, std::uint64_t n, std::size_t order) {
  if (order < n)
    throw DomainError("moment_sum: order must be >= n");
  const auto in = static_cast<std::int64_t>(n);
  // N_k(l, n) vanishes for |l| > n.
  const std::int64_t from = std::max(kp.m() + 1 - kp.k(), -in);
  BigInt total = 0;
  for (std::int64_t l = from; l <= in; ++l) {
    if (l == 0)
      continue;
    const TruncSeries s = nk_series(KrankParams(kp.k(), l), n);
    total += l * s[n];
  }
  return total;
}

namespace {

// Partitions of `rest` into parts <= max_part, counting parts.
void enumerate(std::int64_t rest, std::int64_t max_part, std::int64_t largest,
               std::int64_t parts, std::map<std::int64_t, std::uint64_t> &hist) {
  if (rest == 0) {
    ++hist[largest - parts];
    return;
  }
  for (std::int64_t part = std::min(rest, max_part); part >= 1; --part)
    enumerate(rest - part, part, largest, parts + 1, hist);
}

} // namespace

std::map<std::int64_t, std::uint64_t> dyson_rank_oracle(std::uint64_t n) {
  if (n > kRankOracleBudget)
    throw BudgetExceeded("dyson_rank_oracle: n = " + std::to_string(n) +
                         " exceeds enumeration budget " +
                         std::to_string(kRankOracleBudget));
  std::map<std::int64_t, std::uint64_t> hist;
  const auto in = static_cast<std::int64_t>(n);
  if (n == 0) {
    hist[0] = 1;
    return hist;
  }
  for (std::int64_t first = in; first >= 1; --first)
    enumerate(in - first, first, first, 1, hist);
  return hist;
}

} // namespace appell

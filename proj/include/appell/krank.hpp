#pragma once

// Garvan k-rank counts N_k(m, n), their first partial moments
// N_k^+(m, n) = sum_{l >= m+1-k} l N_k(l, n), and a brute-force Dyson rank
// histogram for k = 2.

#include <cstdint>
#include <map>

#include "appell/series.hpp"

namespace appell {

class KrankParams {
public:
  KrankParams(std::int64_t k, std::int64_t m); // throws InvalidParams if k < 1

  std::int64_t k() const noexcept { return k_; }
  std::int64_t m() const noexcept { return m_; }

private:
  std::int64_t k_;
  std::int64_t m_;
};

inline constexpr std::uint64_t kRankOracleBudget = 80;

/// sum_n N_k(m, n) q^n =
///   1/(q;q)_inf sum_{n>=1} (-1)^{n-1} q^{n((2k-1)n-1)/2 + |m| n} (1 - q^n)
/// for n >= 1; the q^0 coefficient is 1 for m = 0 (empty partition), else 0.
TruncSeries nk_series(const KrankParams &kp, std::size_t order);

/// sum_n N_k^+(m, n) q^n for m >= k - 1, assembled as
///   1/(q;q)_inf [H_{m,2k-1}(q) + (m - k) sum_{n>=1} (-1)^{n-1} q^{(2k-1)C(n,2) + mn}].
/// Throws DomainError for m < k - 1.
TruncSeries nk_dagger_series(const KrankParams &kp, std::size_t order);

/// sum_{l = m+1-k}^{n} l N_k(l, n), each N_k(l, n) read off nk_series.
BigInt moment_sum(const KrankParams &kp, std::uint64_t n, std::size_t order);

/// Rank (largest part - number of parts) histogram over all partitions of
/// n. Throws BudgetExceeded for n > kRankOracleBudget.
std::map<std::int64_t, std::uint64_t> dyson_rank_oracle(std::uint64_t n);

} // namespace appell

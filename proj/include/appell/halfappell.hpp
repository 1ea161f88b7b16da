#pragma once

// Coefficients h_{m,k}(n) of the half Appell sum
//
//   H_{m,k}(q) = sum_{n>=1} (-1)^{n-1} q^{k n(n-1)/2 + m n} / (1 - q^n)
//
// computed three ways (direct expansion, the restricted double sum over
// divisor windows, and the legacy (1,1) identity) plus a divisor counter.

#include <cstdint>
#include <vector>

#include "appell/series.hpp"

namespace appell {

/// Validated (m, k): m >= 0 and k odd, k >= 1. Throws InvalidParams.
class Params {
public:
  Params(std::int64_t m, std::int64_t k);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t k() const noexcept { return k_; }

  friend bool operator==(const Params &, const Params &) = default;

private:
  std::int64_t m_;
  std::int64_t k_;
};

/// Divisor window for a fixed ell: lo2 <= 2j and j < hi.
struct WindowBounds {
  Params params;
  std::int64_t ell;
  std::int64_t lo2; // 2m + k(ell - 1)
  std::int64_t hi;  // 2m + k(2 ell - 1), exclusive

  std::int64_t first_j() const noexcept { return (lo2 + 1) / 2; }
  std::int64_t last_j() const noexcept { return hi - 1; }
  bool contains(std::int64_t j) const noexcept {
    return 2 * j >= lo2 && j < hi;
  }
};

WindowBounds window_bounds(const Params &p, std::int64_t ell);

bool window_contains(const Params &p, std::int64_t ell, std::int64_t j);

/// h_{m,k}(n) by enumerating the divisors ell of n and testing the window
/// on j = n / ell. h(0) is 1 for m = 0 and 0 otherwise.
std::uint64_t h_divisor(const Params &p, std::uint64_t n);

/// Same count in the u-form: divisors ell of n with u(n) < 2k ell <= 2u(n),
/// u(n) = sqrt(2kn + (m - k/2)^2) - (m - k/2), compared without radicals.
std::uint64_t h_divisor_u_form(const Params &p, std::uint64_t n);

TruncSeries h_series_direct(const Params &p, std::size_t order);
TruncSeries h_series_identity(const Params &p, std::size_t order);
/// H_{1,1} from sum_{j>=1, 0<=r<j} q^{j(j+r)} (1 + q^j).
TruncSeries h_series_legacy(std::size_t order);

// Exact comparisons of u(n) against an integer X (no square roots).
bool u_less_than(const Params &p, std::uint64_t n, __int128 x);
bool u_at_least(const Params &p, std::uint64_t n, __int128 x);

struct DoublingSplit {
  std::uint64_t count_a = 0; // 2^{-1-r} u(2^{r+1}n) < 2k ell <= 2^{-r} u(2^r n)
  std::uint64_t count_b = 0; // 2 u(2^r n) < 2k ell <= 2 u(2^{r+1} n)

  std::uint64_t total() const noexcept { return count_a + count_b; }
};

/// Splits h(2^{r+1} n) - h(2^r n) into two sets of divisors of odd n.
/// Throws EvenInput for even (or zero) n.
DoublingSplit doubling_difference(const Params &p, std::uint64_t n, unsigned r);

// Arithmetic helpers shared with the other modules.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

} // namespace appell

#include "appell/halfappell.hpp"

#include <algorithm>
#include <string>

#include "appell/errors.hpp"

namespace appell {

Params::Params(std::int64_t m, std::int64_t k) : m_(m), k_(k) {
  if (m < 0)
    throw InvalidParams("m must be >= 0, got " + std::to_string(m));
  if (k < 1 || k % 2 == 0)
    throw InvalidParams("k must be an odd integer >= 1, got " +
                        std::to_string(k));
}

WindowBounds window_bounds(const Params &p, std::int64_t ell) {
  return {p, ell, 2 * p.m() + p.k() * (ell - 1),
          2 * p.m() + p.k() * (2 * ell - 1)};
}

bool window_contains(const Params &p, std::int64_t ell, std::int64_t j) {
  const __int128 m = p.m(), k = p.k(), l = ell, jj = j;
  return 2 * jj >= 2 * m + k * (l - 1) && jj < 2 * m + 2 * k * l - k;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n < 2)
    return out;
  auto pull = [&](std::uint64_t d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e)
      out.emplace_back(d, e);
  };
  pull(2);
  pull(3);
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    pull(d);
    pull(d + 2);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0)
    return {};
  std::vector<std::uint64_t> ds{1};
  for (const auto &[prime, exp] : factorize(n)) {
    const std::size_t base = ds.size();
    std::uint64_t pw = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i)
        ds.push_back(ds[i] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::uint64_t h_divisor(const Params &p, std::uint64_t n) {
  if (n == 0)
    return p.m() == 0 ? 1 : 0;
  std::uint64_t count = 0;
  for (std::uint64_t ell : divisors(n)) {
    if (window_contains(p, static_cast<std::int64_t>(ell),
                        static_cast<std::int64_t>(n / ell)))
      ++count;
  }
  return count;
}

namespace {

// 4u(n)^2-free form: 2u = sqrt(E) - s with E = 8kn + s^2, s = 2m - k.
__int128 radicand(const Params &p, std::uint64_t n) {
  const __int128 s = 2 * p.m() - p.k();
  return 8 * static_cast<__int128>(p.k()) * n + s * s;
}

} // namespace

bool u_less_than(const Params &p, std::uint64_t n, __int128 x) {
  // u < x  <=>  sqrt(E) < 2x + s, and 2x + s > 0 is required to square.
  const __int128 rhs = 2 * x + (2 * p.m() - p.k());
  if (rhs <= 0)
    return false;
  return radicand(p, n) < rhs * rhs;
}

bool u_at_least(const Params &p, std::uint64_t n, __int128 x) {
  // x <= u  <=>  2x + s <= sqrt(E).
  const __int128 lhs = 2 * x + (2 * p.m() - p.k());
  if (lhs <= 0)
    return true;
  return lhs * lhs <= radicand(p, n);
}

std::uint64_t h_divisor_u_form(const Params &p, std::uint64_t n) {
  if (n == 0)
    return p.m() == 0 ? 1 : 0;
  std::uint64_t count = 0;
  for (std::uint64_t ell : divisors(n)) {
    const __int128 two_k_ell = 2 * static_cast<__int128>(p.k()) * ell;
    const __int128 k_ell = static_cast<__int128>(p.k()) * ell;
    // u < 2k ell and 2k ell <= 2u, i.e. k ell <= u.
    if (u_less_than(p, n, two_k_ell) && u_at_least(p, n, k_ell))
      ++count;
  }
  return count;
}

TruncSeries h_series_direct(const Params &p, std::size_t order) {
  const auto limit = static_cast<std::int64_t>(order);
  std::vector<std::int64_t> acc(order + 1, 0);
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t lead = p.k() * n * (n - 1) / 2 + p.m() * n;
    if (lead > limit)
      break;
    const std::int64_t sign = (n % 2 == 1) ? 1 : -1;
    for (std::int64_t e = lead; e <= limit; e += n)
      acc[static_cast<std::size_t>(e)] += sign;
  }
  TruncSeries s(order);
  for (std::size_t i = 0; i <= order; ++i)
    s[i] = static_cast<long>(acc[i]);
  return s;
}

TruncSeries h_series_identity(const Params &p, std::size_t order) {
  const auto limit = static_cast<std::int64_t>(order);
  std::vector<std::int64_t> acc(order + 1, 0);
  for (std::int64_t ell = 1;; ++ell) {
    const WindowBounds w = window_bounds(p, ell);
    if (w.first_j() * ell > limit)
      break;
    const std::int64_t last = std::min(w.last_j(), limit / ell);
    for (std::int64_t j = w.first_j(); j <= last; ++j)
      ++acc[static_cast<std::size_t>(j * ell)];
  }
  TruncSeries s(order);
  for (std::size_t i = 0; i <= order; ++i)
    s[i] = static_cast<long>(acc[i]);
  return s;
}

TruncSeries h_series_legacy(std::size_t order) {
  std::vector<std::int64_t> acc(order + 1, 0);
  for (std::size_t j = 1; j * j <= order; ++j) {
    for (std::size_t r = 0; r < j; ++r) {
      const std::size_t e = j * (j + r);
      if (e > order)
        break;
      ++acc[e];
      if (e + j <= order)
        ++acc[e + j];
    }
  }
  TruncSeries s(order);
  for (std::size_t i = 0; i <= order; ++i)
    s[i] = static_cast<long>(acc[i]);
  return s;
}

DoublingSplit doubling_difference(const Params &p, std::uint64_t n,
                                  unsigned r) {
  if (n % 2 == 0)
    throw EvenInput("doubling_difference: n must be odd and positive, got " +
                    std::to_string(n));
  if (r > 60 || (n >> (62 - r)) != 0)
    throw DomainError("doubling_difference: 2^(r+1) n exceeds 64 bits");
  const std::uint64_t lower = n << r;       // 2^r n
  const std::uint64_t upper = n << (r + 1); // 2^{r+1} n
  const __int128 scale = static_cast<__int128>(1) << r;

  DoublingSplit split;
  for (std::uint64_t ell : divisors(n)) {
    const __int128 two_k_ell = 2 * static_cast<__int128>(p.k()) * ell;
    const __int128 k_ell = static_cast<__int128>(p.k()) * ell;
    // u(2^{r+1}n) < 2^{r+1} 2k ell  and  2^r 2k ell <= u(2^r n)
    if (u_less_than(p, upper, 2 * scale * two_k_ell) &&
        u_at_least(p, lower, scale * two_k_ell))
      ++split.count_a;
    // u(2^r n) < k ell  and  k ell <= u(2^{r+1} n)
    if (u_less_than(p, lower, k_ell) && u_at_least(p, upper, k_ell))
      ++split.count_b;
  }
  return split;
}

} // namespace appell

#include "appell/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

#include <omp.h>

#include "appell/errors.hpp"

namespace appell {

namespace {

constexpr std::uint16_t kCounterMax = std::numeric_limits<std::uint16_t>::max();

void check_capacity(std::uint64_t x) {
  const std::uint64_t cap = sieve_capacity();
  if (x >= cap)
    throw CapacityExceeded("sieve limit " + std::to_string(x) +
                           " exceeds capacity " + std::to_string(cap) +
                           " (set APPELL_SIEVE_CAPACITY)");
}

// Adds every window cell j * ell landing in [lo, hi] to out[n - lo].
// Returns false if a counter would overflow.
bool fill_segment(const Params &p, std::uint64_t x, std::uint64_t lo,
                  std::uint64_t hi, std::uint16_t *out) {
  const auto ilo = static_cast<std::int64_t>(lo);
  const auto ihi = static_cast<std::int64_t>(hi);
  const auto ix = static_cast<std::int64_t>(x);
  for (std::int64_t ell = 1;; ++ell) {
    const WindowBounds w = window_bounds(p, ell);
    if (w.first_j() * ell > ix)
      break;
    const std::int64_t from = std::max(w.first_j(), (ilo + ell - 1) / ell);
    const std::int64_t to = std::min(w.last_j(), ihi / ell);
    for (std::int64_t j = from; j <= to; ++j) {
      std::uint16_t &c = out[j * ell - ilo];
      if (c == kCounterMax)
        return false;
      ++c;
    }
  }
  return true;
}

std::int64_t first_above(const Rational &y) {
  // Smallest integer d with d > y (y >= 0).
  return y.numerator() / y.denominator() + 1;
}

std::int64_t last_at_most(const Rational &z) {
  return z.numerator() / z.denominator();
}

void check_interval(const Rational &y, const Rational &z) {
  if (y < 0 || z < 0 || y > z)
    throw InvalidInterval("ford_H: need 0 <= y <= z");
}

std::uint64_t count_marked_segment(std::uint64_t lo, std::uint64_t hi,
                                   std::int64_t d_lo, std::int64_t d_hi,
                                   std::vector<std::uint8_t> &mark) {
  mark.assign(hi - lo + 1, 0);
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    const auto ud = static_cast<std::uint64_t>(d);
    for (std::uint64_t n = (lo + ud - 1) / ud * ud; n <= hi; n += ud)
      mark[n - lo] = 1;
  }
  return static_cast<std::uint64_t>(std::count(mark.begin(), mark.end(), 1));
}

} // namespace

std::uint64_t sieve_capacity() {
  if (const char *env = std::getenv("APPELL_SIEVE_CAPACITY")) {
    try {
      return std::stoull(env);
    } catch (const std::exception &) {
    }
  }
  return std::uint64_t{1} << 30;
}

HTable build_table(const Params &p, std::uint64_t x) {
  check_capacity(x);
  HTable t{p, x, std::vector<std::uint16_t>(x + 1, 0)};
  const std::uint64_t segments = x / kSegmentSize + 1;
  std::atomic<bool> overflow{false};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::uint64_t s = 0; s < segments; ++s) {
    const std::uint64_t lo = s * kSegmentSize;
    const std::uint64_t hi = std::min(x, lo + kSegmentSize - 1);
    if (!fill_segment(p, x, lo, hi, t.counts.data() + lo))
      overflow.store(true, std::memory_order_relaxed);
  }

  if (overflow.load())
    throw CounterOverflow("build_table: a counter exceeded 16 bits");
  return t;
}

HTable build_table_serial(const Params &p, std::uint64_t x) {
  check_capacity(x);
  HTable t{p, x, std::vector<std::uint16_t>(x + 1, 0)};
  const auto ix = static_cast<std::int64_t>(x);
  for (std::int64_t ell = 1;; ++ell) {
    const WindowBounds w = window_bounds(p, ell);
    if (w.first_j() * ell > ix)
      break;
    const std::int64_t last = std::min(w.last_j(), ix / ell);
    for (std::int64_t j = w.first_j(); j <= last; ++j) {
      std::uint16_t &c = t.counts[static_cast<std::size_t>(j * ell)];
      if (c == kCounterMax)
        throw CounterOverflow("build_table: a counter exceeded 16 bits");
      ++c;
    }
  }
  return t;
}

CountReport count_values(const HTable &t) {
  std::vector<std::uint64_t> bins(std::size_t{kCounterMax} + 1, 0);
  for (std::uint16_t c : t.counts)
    ++bins[c];
  CountReport r{t.params, t.limit, {}, 0};
  for (std::size_t v = 0; v < bins.size(); ++v) {
    if (bins[v] != 0)
      r.histogram.emplace(v, bins[v]);
    r.total += bins[v];
  }
  return r;
}

std::uint64_t ford_H(std::uint64_t x, Rational y, Rational z) {
  check_interval(y, z);
  const std::int64_t d_lo = std::max<std::int64_t>(1, first_above(y));
  const std::int64_t d_hi =
      std::min<std::int64_t>(last_at_most(z), static_cast<std::int64_t>(x));
  if (x == 0 || d_lo > d_hi)
    return 0;

  const std::uint64_t segments = x / kSegmentSize + 1;
  std::uint64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    std::vector<std::uint8_t> mark;
#pragma omp for schedule(dynamic, 1)
    for (std::uint64_t s = 0; s < segments; ++s) {
      const std::uint64_t lo = std::max<std::uint64_t>(1, s * kSegmentSize);
      const std::uint64_t hi = std::min(x, s * kSegmentSize + kSegmentSize - 1);
      if (lo <= hi)
        total += count_marked_segment(lo, hi, d_lo, d_hi, mark);
    }
  }
  return total;
}

std::uint64_t ford_H_serial(std::uint64_t x, Rational y, Rational z) {
  check_interval(y, z);
  const std::int64_t d_lo = std::max<std::int64_t>(1, first_above(y));
  const std::int64_t d_hi =
      std::min<std::int64_t>(last_at_most(z), static_cast<std::int64_t>(x));
  if (x == 0 || d_lo > d_hi)
    return 0;
  std::vector<std::uint8_t> mark;
  return count_marked_segment(1, x, d_lo, d_hi, mark);
}

std::vector<DensityPoint>
zero_density_scan(const Params &p, std::span<const std::uint64_t> checkpoints) {
  if (checkpoints.empty())
    return {};
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
    throw DomainError("zero_density_scan: checkpoints must be ascending");
  const HTable t = build_table(p, checkpoints.back());

  std::vector<DensityPoint> out;
  out.reserve(checkpoints.size());
  std::uint64_t zeros = 0;
  std::uint64_t next = 0;
  for (std::uint64_t x : checkpoints) {
    for (; next <= x; ++next)
      zeros += t.counts[next] == 0;
    out.push_back({x, zeros,
                   static_cast<double>(zeros) /
                       static_cast<double>(std::max<std::uint64_t>(x, 1))});
  }
  return out;
}

} // namespace appell

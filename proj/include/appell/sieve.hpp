#pragma once

// Bulk tabulation of h_{m,k}(0..x) from the divisor-window double sum,
// value histograms S_{m,k}(ell; x), and Ford's H(x, y, z).
//
// build_table and ford_H are OpenMP kernels over contiguous index segments;
// each has a *_serial twin kept as the reference the tests compare against.
// Segments write disjoint slices, so the output is identical for any
// thread count.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "appell/halfappell.hpp"

namespace appell {

using Rational = boost::rational<std::int64_t>;

struct HTable {
  Params params;
  std::uint64_t limit;
  std::vector<std::uint16_t> counts; // counts[n] = h(n), 0 <= n <= limit
};

struct CountReport {
  Params params;
  std::uint64_t limit;
  std::map<std::uint64_t, std::uint64_t> histogram; // ell -> S(ell; x)
  std::uint64_t total = 0;                          // always limit + 1

  std::uint64_t at(std::uint64_t ell) const {
    const auto it = histogram.find(ell);
    return it == histogram.end() ? 0 : it->second;
  }
};

struct DensityPoint {
  std::uint64_t x;
  std::uint64_t zeros; // S(0; x)
  double ratio;        // zeros / x (zeros / 1 at x = 0)
};

// Maximum number of table entries; APPELL_SIEVE_CAPACITY overrides.
std::uint64_t sieve_capacity();

// Entries per segment of the parallel builders.
inline constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 16;

HTable build_table(const Params &p, std::uint64_t x);
HTable build_table_serial(const Params &p, std::uint64_t x);

CountReport count_values(const HTable &t);

/// #{1 <= n <= x : some d | n with y < d <= z}. Throws InvalidInterval
/// unless 0 <= y <= z.
std::uint64_t ford_H(std::uint64_t x, Rational y, Rational z);
std::uint64_t ford_H_serial(std::uint64_t x, Rational y, Rational z);

std::vector<DensityPoint>
zero_density_scan(const Params &p, std::span<const std::uint64_t> checkpoints);

} // namespace appell

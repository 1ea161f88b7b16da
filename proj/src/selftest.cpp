#include "appell/selftest.hpp"

#include <functional>
#include <string>
#include <vector>

#include "appell/families.hpp"
#include "appell/halfappell.hpp"
#include "appell/krank.hpp"
#include "appell/sieve.hpp"
#include "appell/sptcrank.hpp"

namespace appell {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

bool three_way(std::size_t order) {
  for (std::int64_t m = 0; m <= 4; ++m)
    for (std::int64_t k : {1, 3, 5, 7}) {
      const Params p(m, k);
      const TruncSeries direct = h_series_direct(p, order);
      if (direct != h_series_identity(p, order))
        return false;
      for (std::size_t n = 0; n <= order; ++n)
        if (direct[n] != static_cast<unsigned long>(h_divisor(p, n)))
          return false;
    }
  return h_series_legacy(order) == h_series_direct(Params(1, 1), order);
}

bool lemma_sweep(std::uint64_t p_max, std::uint64_t pair_max) {
  const std::vector<Params> grid{{1, 1}, {0, 3}, {2, 3}, {3, 5}};
  for (const Params &p0 : grid) {
    for (std::uint64_t p : primes_in(2, p_max)) {
      if (lemma22_admissible(p0, p) && !lemma22_witness(p0, p).pass)
        return false;
      if (lemma23_admissible(p0, p) && !lemma23_witness(p0, p).pass)
        return false;
    }
    const auto ps = primes_in(2, pair_max);
    for (unsigned t = 1; t <= 3; ++t)
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
          if (lemma24_admissible(p0, ps[i], ps[j], t) &&
              !lemma24_witness(p0, ps[i], ps[j], t).pass)
            return false;
  }
  return true;
}

bool doubling(std::uint64_t x) {
  const Params p(1, 1);
  const HTable t = build_table(p, x);
  for (std::uint64_t n = 0; 2 * n <= x; ++n)
    if (t.counts[2 * n] < t.counts[n])
      return false;
  for (std::uint64_t n = 1; n < 2000; n += 2)
    for (unsigned r = 0; r <= 3; ++r) {
      const auto split = doubling_difference(p, n, r);
      if (split.total() + h_divisor(p, n << r) != h_divisor(p, n << (r + 1)))
        return false;
    }
  return true;
}

bool sieve_matches_serial(std::uint64_t x) {
  for (std::int64_t m : {0, 1, 3})
    for (std::int64_t k : {1, 3}) {
      const Params p(m, k);
      if (build_table(p, x).counts != build_table_serial(p, x).counts)
        return false;
    }
  return true;
}

bool rank_oracle(std::size_t order) {
  std::vector<TruncSeries> by_m;
  for (std::size_t m = 0; m <= order; ++m)
    by_m.push_back(nk_series(KrankParams(2, static_cast<std::int64_t>(m)), order));
  for (std::size_t n = 0; n <= order; ++n) {
    const auto hist = dyson_rank_oracle(n);
    for (std::int64_t m = -static_cast<std::int64_t>(n);
         m <= static_cast<std::int64_t>(n); ++m) {
      const auto it = hist.find(m);
      const unsigned long want = it == hist.end() ? 0 : it->second;
      if (by_m[static_cast<std::size_t>(m < 0 ? -m : m)][n] != want)
        return false;
    }
  }
  return true;
}

bool moment_identity(std::size_t order) {
  for (std::int64_t k = 1; k <= 3; ++k)
    for (std::int64_t m = k - 1; m <= k + 3; ++m) {
      const KrankParams kp(k, m);
      const TruncSeries dagger = nk_dagger_series(kp, order);
      for (std::size_t n = 0; n <= order; ++n)
        if (moment_sum(kp, n, order) != dagger[n])
          return false;
    }
  return true;
}

bool spt_checks(std::size_t order) {
  const BivarTriangle c5 = bivariate_expand(SptKind::C5, order);
  for (std::int64_t m = -12; m <= 12; ++m) {
    const TruncSeries fixed = mc5_fixed_m_series(m, order);
    if (fixed != mc5_decomposed_series(m, order) || fixed != c5.z_slice(m))
      return false;
  }
  if (!verify_mc1_relation(order).pass)
    return false;
  for (SptKind kind : {SptKind::S, SptKind::C1, SptKind::C5})
    if (!verify_nonneg(kind, order).pass)
      return false;
  return true;
}

bool table_histogram(std::uint64_t x) {
  const CountReport r = count_values(build_table(Params(1, 1), x));
  std::uint64_t sum = 0;
  for (const auto &[ell, c] : r.histogram)
    sum += c;
  return sum == x + 1 && r.total == x + 1;
}

} // namespace

bool run_selftest(SelftestLevel level, std::ostream &log) {
  const bool full = level == SelftestLevel::full;
  const std::vector<Check> checks{
      {"three-way agreement", [=] { return three_way(full ? 2000 : 400); }},
      {"lemma sweeps", [=] {
         return full ? lemma_sweep(10000, 500) : lemma_sweep(2000, 120);
       }},
      {"doubling", [=] { return doubling(full ? 1000000 : 100000); }},
      {"parallel sieve = serial sieve",
       [=] { return sieve_matches_serial(full ? 1000000 : 200000); }},
      {"dyson rank oracle", [=] { return rank_oracle(full ? 50 : 25); }},
      {"k-rank moment identity", [=] { return moment_identity(full ? 60 : 25); }},
      {"spt-crank identities", [=] { return spt_checks(full ? 200 : 50); }},
      {"histogram totals", [=] { return table_histogram(full ? 10000000 : 100000); }},
  };
  bool all = true;
  for (const Check &c : checks) {
    const bool ok = c.run();
    all = all && ok;
    log << (ok ? "PASS " : "FAIL ") << c.name << '\n';
  }
  return all;
}

} // namespace appell

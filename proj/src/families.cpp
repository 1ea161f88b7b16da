#include "appell/families.hpp"

#include <algorithm>
#include <set>

#include "appell/sieve.hpp"

namespace appell {

namespace {

using u128 = unsigned __int128;

constexpr u128 kU64Max = ~std::uint64_t{0};

std::uint64_t abs_k_minus_2m(const Params &p0) {
  const std::int64_t v = p0.k() - 2 * p0.m();
  return static_cast<std::uint64_t>(v < 0 ? -v : v);
}

// 10 |1 - 2m/k| <= p, cleared of the fraction.
bool distance_bound_ok(const Params &p0, std::uint64_t p) {
  return u128{10} * abs_k_minus_2m(p0) <=
         static_cast<u128>(p0.k()) * p;
}

// (q/p)^{t/2} <= 0.96 sqrt 2, squared: 10^4 q^t <= 18432 p^t.
bool ratio_bound_ok(std::uint64_t p, std::uint64_t q, unsigned t) {
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), q, t);
  mpz_ui_pow_ui(rhs.get_mpz_t(), p, t);
  return 10000 * lhs <= 18432 * rhs;
}

// k * base^power, or nullopt past 64 bits.
std::optional<std::uint64_t> checked_product(std::uint64_t k,
                                             std::uint64_t base,
                                             unsigned power) {
  u128 acc = k;
  for (unsigned i = 0; i < power; ++i) {
    acc *= base;
    if (acc > kU64Max)
      return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

WitnessReport make_report(Construction tag, const Params &p0,
                          std::optional<std::uint64_t> p,
                          std::optional<std::uint64_t> q,
                          std::optional<unsigned> t, std::uint64_t n,
                          std::uint64_t predicted) {
  const std::uint64_t verified = h_divisor(p0, n);
  return {tag, p0, p, q, t, n, predicted, verified, predicted == verified};
}

void require(bool ok, const std::string &what) {
  if (!ok)
    throw PreconditionUnmet(what);
}

std::string bound_msg(const Params &p0, std::uint64_t p) {
  return "10|k-2m| <= kp fails: 10*" + std::to_string(abs_k_minus_2m(p0)) +
         " > " + std::to_string(p0.k()) + "*" + std::to_string(p);
}

} // namespace

std::string to_string(Construction c) {
  switch (c) {
  case Construction::Lemma22:
    return "Lemma22";
  case Construction::Lemma23:
    return "Lemma23";
  case Construction::Lemma24:
    return "Lemma24";
  case Construction::Search:
    return "Search";
  }
  return "?";
}

nlohmann::ordered_json to_json(const WitnessReport &r) {
  nlohmann::ordered_json inputs;
  inputs["m"] = r.params.m();
  inputs["k"] = r.params.k();
  if (r.p)
    inputs["p"] = *r.p;
  if (r.q)
    inputs["q"] = *r.q;
  if (r.t)
    inputs["t"] = *r.t;
  nlohmann::ordered_json j;
  j["tag"] = to_string(r.tag);
  j["inputs"] = inputs;
  j["n"] = r.n;
  j["predicted"] = r.predicted;
  j["verified"] = r.verified;
  j["pass"] = r.pass;
  return j;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  if (n % 3 == 0)
    return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6)
    if (n % d == 0 || n % (d + 2) == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi)
    return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi / i; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= hi; j += i)
        composite[j] = true;
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i)
    if (!composite[i])
      out.push_back(i);
  return out;
}

bool lemma22_admissible(const Params &p0, std::uint64_t p) {
  const auto k = static_cast<std::uint64_t>(p0.k());
  return is_prime(p) && p >= 3 * k * k && distance_bound_ok(p0, p);
}

bool lemma23_admissible(const Params &p0, std::uint64_t p) {
  const auto k = static_cast<std::uint64_t>(p0.k());
  return is_prime(p) && p >= 2 * k && distance_bound_ok(p0, p);
}

bool lemma24_admissible(const Params &p0, std::uint64_t p, std::uint64_t q,
                        unsigned t) {
  return t >= 1 && q > p && lemma23_admissible(p0, p) && is_prime(q) &&
         ratio_bound_ok(p, q, t);
}

WitnessReport lemma22_witness(const Params &p0, std::uint64_t p) {
  const auto k = static_cast<std::uint64_t>(p0.k());
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(p >= 3 * k * k, "p >= 3k^2 fails: " + std::to_string(p) + " < " +
                              std::to_string(3 * k * k));
  require(distance_bound_ok(p0, p), bound_msg(p0, p));
  // gcd(k, p) = 1 follows from p >= 3k^2 > k.
  require(k % p != 0, "gcd(k, p) != 1");
  const auto n = checked_product(k, p, 1);
  require(n.has_value(), "kp exceeds 64 bits");
  return make_report(Construction::Lemma22, p0, p, std::nullopt, std::nullopt,
                     *n, 0);
}

WitnessReport lemma23_witness(const Params &p0, std::uint64_t p) {
  const auto k = static_cast<std::uint64_t>(p0.k());
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(p >= 2 * k, "p >= 2k fails: " + std::to_string(p) + " < " +
                          std::to_string(2 * k));
  require(distance_bound_ok(p0, p), bound_msg(p0, p));
  const auto n = checked_product(k, p, 2);
  require(n.has_value(), "kp^2 exceeds 64 bits");
  return make_report(Construction::Lemma23, p0, p, std::nullopt, std::nullopt,
                     *n, 1);
}

WitnessReport lemma24_witness(const Params &p0, std::uint64_t p,
                              std::uint64_t q, unsigned t) {
  const auto k = static_cast<std::uint64_t>(p0.k());
  require(t >= 1, "t must be >= 1");
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(is_prime(q), std::to_string(q) + " is not prime");
  require(q > p, "q > p fails");
  require(p >= 2 * k, "p >= 2k fails: " + std::to_string(p) + " < " +
                          std::to_string(2 * k));
  require(distance_bound_ok(p0, p), bound_msg(p0, p));
  require(ratio_bound_ok(p, q, t),
          "10^4 q^t <= 18432 p^t fails for p=" + std::to_string(p) +
              ", q=" + std::to_string(q) + ", t=" + std::to_string(t));
  const auto n = checked_product(k, static_cast<std::uint64_t>(u128{p} * q), t);
  require(p <= kU64Max / q && n.has_value(), "k p^t q^t exceeds 64 bits");
  return make_report(Construction::Lemma24, p0, p, q, t, *n, 1 + t);
}

std::vector<WitnessReport> witnesses_for_value(const Params &p0,
                                               std::uint64_t target,
                                               std::size_t count,
                                               std::uint64_t budget) {
  std::vector<WitnessReport> found;
  std::set<std::uint64_t> seen;
  if (count == 0)
    return found;
  auto keep = [&](const WitnessReport &r) {
    if (r.pass && seen.insert(r.n).second)
      found.push_back(r);
    return found.size() >= count;
  };

  const std::vector<std::uint64_t> primes = primes_in(2, budget);
  const auto k = static_cast<std::uint64_t>(p0.k());
  if (target == 0) {
    for (std::uint64_t p : primes)
      if (lemma22_admissible(p0, p) && keep(lemma22_witness(p0, p)))
        return found;
  } else if (target == 1) {
    for (std::uint64_t p : primes) {
      if (!checked_product(k, p, 2))
        break;
      if (lemma23_admissible(p0, p) && keep(lemma23_witness(p0, p)))
        return found;
    }
  } else if (target - 1 <= 64) {
    const auto t = static_cast<unsigned>(target - 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (!checked_product(k, p, 2 * t))
        break; // every later pair is larger still
      if (!lemma23_admissible(p0, p))
        continue;
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        const std::uint64_t q = primes[j];
        if (!ratio_bound_ok(p, q, t) || !checked_product(k, p * q, t))
          break;
        if (keep(lemma24_witness(p0, p, q, t)))
          return found;
      }
    }
  }

  const std::uint64_t scan = std::min(budget, sieve_capacity() - 1);
  const HTable table = build_table(p0, scan);
  for (std::uint64_t n = 0; n <= scan; ++n) {
    if (table.counts[n] != target || seen.count(n))
      continue;
    if (keep(make_report(Construction::Search, p0, std::nullopt, std::nullopt,
                         std::nullopt, n, target)))
      return found;
  }
  throw BudgetExhausted("found " + std::to_string(found.size()) + " of " +
                            std::to_string(count) + " witnesses for value " +
                            std::to_string(target) + " within budget " +
                            std::to_string(budget),
                        std::move(found));
}

} // namespace appell

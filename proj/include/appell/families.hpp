#pragma once

// Prime-family witnesses: n = kp with h = 0, n = kp^2 with h = 1, and
// n = k p^t q^t with h = 1 + t, each checked against h_divisor.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "appell/errors.hpp"
#include "appell/halfappell.hpp"

namespace appell {

enum class Construction { Lemma22, Lemma23, Lemma24, Search };

std::string to_string(Construction c);

struct WitnessReport {
  Construction tag;
  Params params;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> q;
  std::optional<unsigned> t;
  std::uint64_t n;
  std::uint64_t predicted;
  std::uint64_t verified;
  bool pass;
};

nlohmann::ordered_json to_json(const WitnessReport &r);

class BudgetExhausted : public Error {
public:
  BudgetExhausted(const std::string &what, std::vector<WitnessReport> partial)
      : Error(what), partial_(std::move(partial)) {}

  const std::vector<WitnessReport> &partial() const noexcept { return partial_; }

private:
  std::vector<WitnessReport> partial_;
};

bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// Each constructor throws PreconditionUnmet naming the violated condition.
WitnessReport lemma22_witness(const Params &p0, std::uint64_t p);
WitnessReport lemma23_witness(const Params &p0, std::uint64_t p);
WitnessReport lemma24_witness(const Params &p0, std::uint64_t p,
                              std::uint64_t q, unsigned t);

// Precondition predicates (no throw), used by sweeps and the search.
bool lemma22_admissible(const Params &p0, std::uint64_t p);
bool lemma23_admissible(const Params &p0, std::uint64_t p);
bool lemma24_admissible(const Params &p0, std::uint64_t p, std::uint64_t q,
                        unsigned t);

/// Up to `count` distinct n with h(n) = target. Lemma recipes run first
/// (primes up to `budget`), then a table scan of h(0..budget). Throws
/// BudgetExhausted, carrying what was found, if fewer than `count` turn up.
std::vector<WitnessReport> witnesses_for_value(const Params &p0,
                                               std::uint64_t target,
                                               std::size_t count,
                                               std::uint64_t budget);

} // namespace appell

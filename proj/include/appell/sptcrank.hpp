#pragma once

// spt-crank-type two-variable series
//
//   S(z,q)     = sum_{n>=1} q^n (q^{n+1};q)_inf / ((zq^n;q)_inf (z^{-1}q^n;q)_inf)
//   S_C1(z,q)  = sum_{n>=1} q^n (q^{2n+1};q^2)_inf (q^{n+1};q)_inf / (...)
//   S_C5(z,q)  = sum_{n>=1} q^{n(n+1)/2} (q^{2n+1};q^2)_inf (q^{n+1};q)_inf / (...)
//
// with coefficient tables N_S(m,n), M_C1(m,n), M_C5(m,n), the univariate
// fixed-m forms of M_C5 built from H_{|m|+1,1}, and the checks tying them
// together.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "appell/series.hpp"

namespace appell {

enum class SptKind { S, C1, C5 };

std::string to_string(SptKind kind);
SptKind spt_kind_from_string(const std::string &s); // throws DomainError

inline constexpr std::size_t kBivariateBudget = 400;

/// Coefficient triangle of the chosen series to q-order N. Throws
/// CapacityExceeded for N > kBivariateBudget.
BivarTriangle bivariate_expand(SptKind kind, std::size_t order);

/// Term-by-term reference: every outer term is the product of its numerator
/// with bivar_geom_factor expansions of both denominators. O(N^5); use for
/// small N only.
BivarTriangle bivariate_expand_reference(SptKind kind, std::size_t order);

/// The z = 1 specialization as a plain q-series, built from univariate
/// Pochhammer products only.
TruncSeries spt_z_one_series(SptKind kind, std::size_t order);

/// 1/(q^2;q^2)_inf (H_{|m|+1,1}(q) - H_{|m|+1,1}(q^2)).
TruncSeries mc5_fixed_m_series(std::int64_t m, std::size_t order);

/// 1/(q^2;q^2)_inf [ sum h(2n+1) q^{2n+1} + sum (h(2n) - h(n)) q^{2n} ],
/// h = h_{|m|+1,1}.
TruncSeries mc5_decomposed_series(std::int64_t m, std::size_t order);

struct Violation {
  std::size_t n;
  std::int64_t m;
  BigInt lhs;
  BigInt rhs;
};

struct VerifyReport {
  std::string kind;
  std::size_t order;
  bool pass;
  std::optional<Violation> first_violation;
};

nlohmann::ordered_json to_json(const VerifyReport &r);

/// M_C1(m,n) = M_C5(m,n) + N_S(m, n/2) (zero for odd n), all n <= N.
VerifyReport verify_mc1_relation(std::size_t order);

/// Every entry of the triangle is >= 0.
VerifyReport verify_nonneg(SptKind kind, std::size_t order);
VerifyReport verify_nonneg(SptKind kind, const BivarTriangle &t);

} // namespace appell

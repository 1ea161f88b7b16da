#include "appell/sptcrank.hpp"

#include <array>

#include "appell/errors.hpp"
#include "appell/halfappell.hpp"

namespace appell {

namespace {

bool has_odd_factor(SptKind kind) { return kind != SptKind::S; }

// Smallest q-exponent carried by outer term n.
std::size_t outer_shift(SptKind kind, std::size_t n) {
  return kind == SptKind::C5 ? n * (n + 1) / 2 : n;
}

void check_budget(std::size_t order) {
  if (order > kBivariateBudget)
    throw CapacityExceeded("bivariate order " + std::to_string(order) +
                           " exceeds budget " +
                           std::to_string(kBivariateBudget));
}

BivarTriangle constant_in_z(const TruncSeries &s) {
  BivarTriangle t(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n)
    t.at_mut(n, 0) = s[n];
  return t;
}

TruncSeries numerator(SptKind kind, std::size_t n, std::size_t order) {
  TruncSeries num = pochhammer(static_cast<std::int64_t>(n) + 1, 1, order);
  if (has_odd_factor(kind))
    num = mul(num, pochhammer(2 * static_cast<std::int64_t>(n) + 1, 2, order));
  return num;
}

} // namespace

std::string to_string(SptKind kind) {
  switch (kind) {
  case SptKind::S:
    return "S";
  case SptKind::C1:
    return "C1";
  case SptKind::C5:
    return "C5";
  }
  return "?";
}

SptKind spt_kind_from_string(const std::string &s) {
  if (s == "S")
    return SptKind::S;
  if (s == "C1")
    return SptKind::C1;
  if (s == "C5")
    return SptKind::C5;
  throw DomainError("unknown spt series kind '" + s + "' (expected S, C1, C5)");
}

BivarTriangle bivariate_expand(SptKind kind, std::size_t order) {
  check_budget(order);
  BivarTriangle result(order);
  if (order == 0)
    return result;
  // factor holds F_n = numerator_n / ((zq^n;q)_inf (z^{-1}q^n;q)_inf), built
  // downward from F_{N+1} = 1 (every factor of F_{N+1} is 1 mod q^{N+1}).
  BivarTriangle factor = BivarTriangle::one(order);
  for (std::size_t n = order; n >= 1; --n) {
    factor.multiply_by_one_minus_q(n + 1);
    if (has_odd_factor(kind))
      factor.multiply_by_one_minus_q(2 * n + 1);
    factor.divide_by_geometric(+1, n);
    factor.divide_by_geometric(-1, n);
    const std::size_t shift = outer_shift(kind, n);
    if (shift <= order)
      result.add_shifted(factor, shift);
  }
  return result;
}

BivarTriangle bivariate_expand_reference(SptKind kind, std::size_t order) {
  check_budget(order);
  BivarTriangle result(order);
  for (std::size_t n = 1; outer_shift(kind, n) <= order; ++n) {
    const auto in = static_cast<std::int64_t>(n);
    BivarTriangle term = constant_in_z(numerator(kind, n, order));
    term = bivar_mul(term, bivar_geom_factor(+1, in, 1, order));
    term = bivar_mul(term, bivar_geom_factor(-1, in, 1, order));
    result.add_shifted(term, outer_shift(kind, n));
  }
  return result;
}

TruncSeries spt_z_one_series(SptKind kind, std::size_t order) {
  TruncSeries total(order);
  for (std::size_t n = 1; outer_shift(kind, n) <= order; ++n) {
    const TruncSeries denom = pochhammer(static_cast<std::int64_t>(n), 1, order);
    const TruncSeries inv = invert_unit(denom);
    const TruncSeries term = mul(numerator(kind, n, order), mul(inv, inv));
    total = add(total, mul(TruncSeries::monomial(outer_shift(kind, n), order), term));
  }
  return total;
}

TruncSeries mc5_fixed_m_series(std::int64_t m, std::size_t order) {
  const Params p(m < 0 ? -m + 1 : m + 1, 1);
  const TruncSeries h = h_series_direct(p, order);
  return mul(invert_unit(pochhammer(2, 2, order)), sub(h, dilate(h, 2)));
}

TruncSeries mc5_decomposed_series(std::int64_t m, std::size_t order) {
  const Params p(m < 0 ? -m + 1 : m + 1, 1);
  TruncSeries split(order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n % 2 == 1) {
      split[n] = static_cast<unsigned long>(h_divisor(p, n));
    } else {
      const auto even = static_cast<long>(h_divisor(p, n));
      const auto half = static_cast<long>(h_divisor(p, n / 2));
      split[n] = even - half;
    }
  }
  return mul(invert_unit(pochhammer(2, 2, order)), split);
}

nlohmann::ordered_json to_json(const VerifyReport &r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j["order"] = r.order;
  j["pass"] = r.pass;
  if (r.first_violation) {
    const Violation &v = *r.first_violation;
    j["first_violation"] = {{"n", v.n},
                            {"m", v.m},
                            {"lhs", v.lhs.get_str()},
                            {"rhs", v.rhs.get_str()}};
  }
  return j;
}

VerifyReport verify_mc1_relation(std::size_t order) {
  check_budget(order);
  std::array<BivarTriangle, 3> t;
  constexpr std::array<SptKind, 3> kinds{SptKind::S, SptKind::C1, SptKind::C5};
#pragma omp parallel for schedule(static, 1)
  for (int i = 0; i < 3; ++i)
    t[i] = bivariate_expand(kinds[i], order);
  const BivarTriangle &s = t[0], &c1 = t[1], &c5 = t[2];

  VerifyReport report{"C1=C5+S(n/2)", order, true, std::nullopt};
  for (std::size_t n = 0; n <= order; ++n) {
    const auto span = static_cast<std::int64_t>(n);
    for (std::int64_t e = -span; e <= span; ++e) {
      BigInt rhs = c5.at(n, e);
      if (n % 2 == 0)
        rhs += s.at(n / 2, e);
      if (c1.at(n, e) != rhs) {
        report.pass = false;
        report.first_violation = Violation{n, e, c1.at(n, e), rhs};
        return report;
      }
    }
  }
  return report;
}

VerifyReport verify_nonneg(SptKind kind, const BivarTriangle &t) {
  VerifyReport report{to_string(kind), t.order(), true, std::nullopt};
  for (std::size_t n = 0; n <= t.order(); ++n) {
    const auto span = static_cast<std::int64_t>(n);
    for (std::int64_t e = -span; e <= span; ++e) {
      if (sgn(t.at(n, e)) < 0) {
        report.pass = false;
        report.first_violation = Violation{n, e, t.at(n, e), 0};
        return report;
      }
    }
  }
  return report;
}

VerifyReport verify_nonneg(SptKind kind, std::size_t order) {
  return verify_nonneg(kind, bivariate_expand(kind, order));
}

} // namespace appell

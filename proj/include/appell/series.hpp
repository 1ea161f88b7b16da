#pragma once

// Exact truncated power series in q, and bivariate (Laurent in z) triangles.
//
// Every value carries its truncation order N explicitly: coefficients of
// q^0..q^N are exact, everything above is unknown. Binary operations
// return a result at the smaller of the two operand orders.

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace appell {

using BigInt = mpz_class;

class TruncSeries {
public:
  explicit TruncSeries(std::size_t order = 0);
  // Coefficients beyond order are dropped, missing ones are zero.
  TruncSeries(std::size_t order, std::vector<BigInt> coeffs);

  static TruncSeries one(std::size_t order);
  static TruncSeries monomial(std::size_t exponent, std::size_t order,
                              const BigInt &coeff = 1);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const BigInt &operator[](std::size_t n) const { return coeffs_[n]; }
  BigInt &operator[](std::size_t n) { return coeffs_[n]; }
  const BigInt &coeff(std::size_t n) const { return coeffs_.at(n); }

  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;

  // One "n:coeff" line per coefficient, ascending n.
  std::string dump() const;

  friend bool operator==(const TruncSeries &, const TruncSeries &) = default;

private:
  std::vector<BigInt> coeffs_;
};

TruncSeries add(const TruncSeries &a, const TruncSeries &b);
TruncSeries sub(const TruncSeries &a, const TruncSeries &b);
TruncSeries mul(const TruncSeries &a, const TruncSeries &b);
TruncSeries scale(const TruncSeries &a, const BigInt &factor);
TruncSeries truncate(const TruncSeries &a, std::size_t order);

// Multiplicative inverse of a series whose constant term is +1 or -1.
// Throws NonUnitConstantTerm otherwise.
TruncSeries invert_unit(const TruncSeries &a);

// (q^a_exp; q^step)_inf truncated at order. Throws InvalidExponent if
// a_exp < 1 or step < 1.
TruncSeries pochhammer(std::int64_t a_exp, std::int64_t step,
                       std::size_t order);

// q -> q^d. Throws InvalidExponent if d < 1.
TruncSeries dilate(const TruncSeries &a, std::int64_t d);

inline TruncSeries operator+(const TruncSeries &a, const TruncSeries &b) {
  return add(a, b);
}
inline TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) {
  return sub(a, b);
}
inline TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
  return mul(a, b);
}

/// Truncated expansion in q with Laurent polynomials in z as coefficients.
///
/// Row n (the q^n coefficient) only holds z-exponents e with |e| <= n, so
/// rows are stored densely in a single buffer: row n occupies slots
/// [n^2, (n+1)^2), with z^e at offset e + n.
class BivarTriangle {
public:
  explicit BivarTriangle(std::size_t order = 0);

  static BivarTriangle one(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  // Zero for |e| > n.
  const BigInt &at(std::size_t n, std::int64_t e) const;
  // Throws std::out_of_range if |e| > n.
  BigInt &at_mut(std::size_t n, std::int64_t e);

  // Nonzero entries of row n keyed by z-exponent.
  std::map<std::int64_t, BigInt> row(std::size_t n) const;
  std::span<const BigInt> dense_row(std::size_t n) const;

  // *this *= 1 / (1 - z^zsign q^qexp), zsign in {+1, -1}, qexp >= 1.
  void divide_by_geometric(int zsign, std::size_t qexp);
  // *this *= (1 - q^qexp), qexp >= 1.
  void multiply_by_one_minus_q(std::size_t qexp);
  // *this += q^shift * other (other's order must cover order() - shift).
  void add_shifted(const BivarTriangle &other, std::size_t shift);

  // Coefficient of z^e as a series in q.
  TruncSeries z_slice(std::int64_t e) const;
  // Sum over e of each row: the z = 1 specialization.
  TruncSeries z_one() const;

  friend bool operator==(const BivarTriangle &, const BivarTriangle &) = default;

private:
  static std::size_t row_start(std::size_t n) noexcept { return n * n; }

  std::size_t order_;
  std::vector<BigInt> cells_;
};

BivarTriangle bivar_mul(const BivarTriangle &a, const BivarTriangle &b);

// Product of 1/(1 - z^zsign q^j) over j = base_q, base_q + step, ... <= order.
BivarTriangle bivar_geom_factor(int zsign, std::int64_t base_q,
                                std::int64_t step, std::size_t order);

// Lets test frameworks print series as text.
inline void PrintTo(const TruncSeries &s, std::ostream *os) { *os << s.dump(); }

} // namespace appell

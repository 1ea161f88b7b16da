#include "appell/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "appell/errors.hpp"

namespace appell {

namespace {

const BigInt &zero_bigint() {
  static const BigInt zero{0};
  return zero;
}

} // namespace

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncSeries TruncSeries::monomial(std::size_t exponent, std::size_t order,
                                  const BigInt &coeff) {
  TruncSeries s(order);
  if (exponent <= order)
    s.coeffs_[exponent] = coeff;
  return s;
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt &c) { return sgn(c) == 0; });
}

std::string TruncSeries::dump() const {
  std::ostringstream out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    out << n << ':' << coeffs_[n].get_str() << '\n';
  return out.str();
}

TruncSeries add(const TruncSeries &a, const TruncSeries &b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries r(order);
  for (std::size_t n = 0; n <= order; ++n)
    r[n] = a[n] + b[n];
  return r;
}

TruncSeries sub(const TruncSeries &a, const TruncSeries &b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries r(order);
  for (std::size_t n = 0; n <= order; ++n)
    r[n] = a[n] - b[n];
  return r;
}

TruncSeries mul(const TruncSeries &a, const TruncSeries &b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(b[j]) != 0)
        mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

TruncSeries scale(const TruncSeries &a, const BigInt &factor) {
  TruncSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n)
    r[n] = a[n] * factor;
  return r;
}

TruncSeries truncate(const TruncSeries &a, std::size_t order) {
  const std::size_t keep = std::min(order, a.order());
  return TruncSeries(keep, {a.coeffs().begin(), a.coeffs().begin() + keep + 1});
}

TruncSeries invert_unit(const TruncSeries &a) {
  if (abs(a[0]) != 1)
    throw NonUnitConstantTerm("invert_unit: constant term is " +
                              a[0].get_str() + ", expected +1 or -1");
  const std::size_t order = a.order();
  const BigInt &lead = a[0]; // its own inverse
  TruncSeries b(order);
  b[0] = lead;
  BigInt acc;
  for (std::size_t n = 1; n <= order; ++n) {
    acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (sgn(a[i]) != 0)
        mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
    }
    b[n] = -lead * acc;
  }
  return b;
}

TruncSeries pochhammer(std::int64_t a_exp, std::int64_t step,
                       std::size_t order) {
  if (a_exp < 1 || step < 1)
    throw InvalidExponent("pochhammer: exponents must be >= 1");
  TruncSeries r = TruncSeries::one(order);
  for (auto j = static_cast<std::size_t>(a_exp); j <= order;
       j += static_cast<std::size_t>(step)) {
    // r *= (1 - q^j), descending so r[n - j] is still the old value.
    for (std::size_t n = order; n >= j; --n)
      r[n] -= r[n - j];
  }
  return r;
}

TruncSeries dilate(const TruncSeries &a, std::int64_t d) {
  if (d < 1)
    throw InvalidExponent("dilate: factor must be >= 1");
  const auto step = static_cast<std::size_t>(d);
  TruncSeries r(a.order());
  for (std::size_t n = 0; n * step <= a.order(); ++n)
    r[n * step] = a[n];
  return r;
}

// ---------------------------------------------------------------------------

BivarTriangle::BivarTriangle(std::size_t order)
    : order_(order), cells_((order + 1) * (order + 1)) {}

BivarTriangle BivarTriangle::one(std::size_t order) {
  BivarTriangle t(order);
  t.cells_[0] = 1;
  return t;
}

const BigInt &BivarTriangle::at(std::size_t n, std::int64_t e) const {
  const auto span = static_cast<std::int64_t>(n);
  if (n > order_ || e > span || e < -span)
    return zero_bigint();
  return cells_[row_start(n) + static_cast<std::size_t>(e + span)];
}

BigInt &BivarTriangle::at_mut(std::size_t n, std::int64_t e) {
  const auto span = static_cast<std::int64_t>(n);
  if (n > order_ || e > span || e < -span)
    throw std::out_of_range("BivarTriangle: z-exponent outside |e| <= n");
  return cells_[row_start(n) + static_cast<std::size_t>(e + span)];
}

std::map<std::int64_t, BigInt> BivarTriangle::row(std::size_t n) const {
  std::map<std::int64_t, BigInt> out;
  const auto span = static_cast<std::int64_t>(n);
  for (std::int64_t e = -span; e <= span; ++e) {
    const BigInt &c = at(n, e);
    if (sgn(c) != 0)
      out.emplace(e, c);
  }
  return out;
}

std::span<const BigInt> BivarTriangle::dense_row(std::size_t n) const {
  return std::span<const BigInt>(cells_).subspan(row_start(n), 2 * n + 1);
}

void BivarTriangle::divide_by_geometric(int zsign, std::size_t qexp) {
  if ((zsign != 1 && zsign != -1) || qexp < 1)
    throw InvalidExponent("divide_by_geometric: need zsign = +-1, qexp >= 1");
  // B[n][e] = A[n][e] + B[n - qexp][e - zsign]; ascending n reads final rows.
  for (std::size_t n = qexp; n <= order_; ++n) {
    const std::size_t src = n - qexp;
    const auto src_span = static_cast<std::int64_t>(src);
    for (std::int64_t se = -src_span; se <= src_span; ++se) {
      const BigInt &c = cells_[row_start(src) + static_cast<std::size_t>(se + src_span)];
      if (sgn(c) == 0)
        continue;
      const std::int64_t e = se + zsign;
      cells_[row_start(n) + static_cast<std::size_t>(e + static_cast<std::int64_t>(n))] += c;
    }
  }
}

void BivarTriangle::multiply_by_one_minus_q(std::size_t qexp) {
  if (qexp < 1)
    throw InvalidExponent("multiply_by_one_minus_q: qexp must be >= 1");
  for (std::size_t n = order_; n >= qexp; --n) {
    const std::size_t src = n - qexp;
    for (std::size_t i = 0; i < 2 * src + 1; ++i) {
      const BigInt &c = cells_[row_start(src) + i];
      if (sgn(c) != 0)
        cells_[row_start(n) + i + qexp] -= c;
    }
  }
}

void BivarTriangle::add_shifted(const BivarTriangle &other, std::size_t shift) {
  for (std::size_t n = shift; n <= order_; ++n) {
    const std::size_t src = n - shift;
    if (src > other.order_)
      throw std::invalid_argument("add_shifted: operand order too small");
    for (std::size_t i = 0; i < 2 * src + 1; ++i)
      cells_[row_start(n) + i + shift] += other.cells_[row_start(src) + i];
  }
}

TruncSeries BivarTriangle::z_slice(std::int64_t e) const {
  TruncSeries s(order_);
  for (std::size_t n = 0; n <= order_; ++n)
    s[n] = at(n, e);
  return s;
}

TruncSeries BivarTriangle::z_one() const {
  TruncSeries s(order_);
  for (std::size_t n = 0; n <= order_; ++n)
    for (const BigInt &c : dense_row(n))
      s[n] += c;
  return s;
}

BivarTriangle bivar_mul(const BivarTriangle &a, const BivarTriangle &b) {
  const std::size_t order = std::min(a.order(), b.order());
  BivarTriangle r(order);
  for (std::size_t n1 = 0; n1 <= order; ++n1) {
    const auto s1 = static_cast<std::int64_t>(n1);
    for (std::int64_t e1 = -s1; e1 <= s1; ++e1) {
      const BigInt &c1 = a.at(n1, e1);
      if (sgn(c1) == 0)
        continue;
      for (std::size_t n2 = 0; n1 + n2 <= order; ++n2) {
        const auto s2 = static_cast<std::int64_t>(n2);
        for (std::int64_t e2 = -s2; e2 <= s2; ++e2) {
          const BigInt &c2 = b.at(n2, e2);
          if (sgn(c2) != 0)
            mpz_addmul(r.at_mut(n1 + n2, e1 + e2).get_mpz_t(),
                       c1.get_mpz_t(), c2.get_mpz_t());
        }
      }
    }
  }
  return r;
}

BivarTriangle bivar_geom_factor(int zsign, std::int64_t base_q,
                                std::int64_t step, std::size_t order) {
  if (base_q < 1 || step < 1)
    throw InvalidExponent("bivar_geom_factor: exponents must be >= 1");
  if (zsign != 1 && zsign != -1)
    throw InvalidExponent("bivar_geom_factor: zsign must be +1 or -1");
  BivarTriangle t = BivarTriangle::one(order);
  for (auto j = static_cast<std::size_t>(base_q); j <= order;
       j += static_cast<std::size_t>(step))
    t.divide_by_geometric(zsign, j);
  return t;
}

} // namespace appell

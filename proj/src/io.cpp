#include "appell/io.hpp"

#include <charconv>
#include <limits>

#include <json.hpp>

#include "appell/errors.hpp"

namespace appell::io {

namespace {

std::uint64_t parse_digits(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError("not a nonnegative integer: '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_signed(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError("not an integer: '" + std::string(s) + "'");
  return v;
}

// Buffered writer for the multi-megabyte table dumps.
class LineWriter {
public:
  explicit LineWriter(std::FILE *out) : out_(out) { buf_.reserve(kChunk + 64); }
  ~LineWriter() { flush(); }

  void put(std::string_view s) {
    buf_.append(s);
    maybe_flush();
  }
  void put(std::uint64_t v) {
    char tmp[24];
    const auto res = std::to_chars(tmp, tmp + sizeof tmp, v);
    buf_.append(tmp, res.ptr);
  }
  void put(char c) {
    buf_.push_back(c);
    maybe_flush();
  }
  void flush() {
    if (!buf_.empty())
      std::fwrite(buf_.data(), 1, buf_.size(), out_);
    buf_.clear();
  }

private:
  static constexpr std::size_t kChunk = 1 << 20;
  void maybe_flush() {
    if (buf_.size() >= kChunk)
      flush();
  }
  std::FILE *out_;
  std::string buf_;
};

std::vector<std::uint64_t> rows_for(const CountReport &r,
                                    const std::vector<std::uint64_t> &only) {
  if (!only.empty())
    return only;
  std::vector<std::uint64_t> rows;
  for (const auto &[ell, c] : r.histogram)
    rows.push_back(ell);
  return rows;
}

} // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "csv")
    return OutputFormat::csv;
  if (s == "json")
    return OutputFormat::json;
  if (s == "plain")
    return OutputFormat::plain;
  throw DomainError("unknown format '" + std::string(s) + "'");
}

std::uint64_t parse_count(std::string_view s) {
  const auto caret = s.find('^');
  if (caret == std::string_view::npos)
    return parse_digits(s);
  const std::uint64_t base = parse_digits(s.substr(0, caret));
  const std::uint64_t exp = parse_digits(s.substr(caret + 1));
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && v > std::numeric_limits<std::uint64_t>::max() / base)
      throw DomainError("integer overflow in '" + std::string(s) + "'");
    v *= base;
  }
  return v;
}

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_signed(s));
  const std::int64_t num = parse_signed(s.substr(0, slash));
  const std::int64_t den = parse_signed(s.substr(slash + 1));
  if (den == 0)
    throw DomainError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

std::vector<std::uint64_t> parse_count_list(std::string_view s) {
  std::vector<std::uint64_t> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_count(s.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void write_table_csv(std::FILE *out, const HTable &t) {
  LineWriter w(out);
  w.put("n,h\n");
  for (std::uint64_t n = 0; n <= t.limit; ++n) {
    w.put(n);
    w.put(',');
    w.put(static_cast<std::uint64_t>(t.counts[n]));
    w.put('\n');
  }
}

void write_table_plain(std::FILE *out, const HTable &t) {
  LineWriter w(out);
  for (std::uint64_t n = 0; n <= t.limit; ++n) {
    w.put(n);
    w.put(':');
    w.put(static_cast<std::uint64_t>(t.counts[n]));
    w.put('\n');
  }
}

void write_table_json(std::FILE *out, const HTable &t) {
  LineWriter w(out);
  w.put("{\"m\":");
  w.put(static_cast<std::uint64_t>(t.params.m()));
  w.put(",\"k\":");
  w.put(static_cast<std::uint64_t>(t.params.k()));
  w.put(",\"limit\":");
  w.put(t.limit);
  w.put(",\"counts\":[");
  for (std::uint64_t n = 0; n <= t.limit; ++n) {
    if (n)
      w.put(',');
    w.put(static_cast<std::uint64_t>(t.counts[n]));
  }
  w.put("]}\n");
}

std::string count_report_csv(const CountReport &r,
                             const std::vector<std::uint64_t> &only) {
  std::string s = "ell,count\n";
  for (std::uint64_t ell : rows_for(r, only))
    s += std::to_string(ell) + ',' + std::to_string(r.at(ell)) + '\n';
  return s;
}

std::string count_report_json(const CountReport &r,
                              const std::vector<std::uint64_t> &only) {
  nlohmann::ordered_json j;
  j["m"] = r.params.m();
  j["k"] = r.params.k();
  j["limit"] = r.limit;
  j["total"] = r.total;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (std::uint64_t ell : rows_for(r, only))
    counts[std::to_string(ell)] = r.at(ell);
  j["counts"] = counts;
  return j.dump() + '\n';
}

std::string series_csv(const TruncSeries &s) {
  std::string out = "n,coeff\n";
  for (std::size_t n = 0; n <= s.order(); ++n)
    out += std::to_string(n) + ',' + s[n].get_str() + '\n';
  return out;
}

std::string series_json(const TruncSeries &s) {
  nlohmann::ordered_json j;
  j["order"] = s.order();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  // Strings: coefficients may exceed 64 bits.
  for (const BigInt &c : s.coeffs())
    coeffs.push_back(c.get_str());
  j["coeffs"] = coeffs;
  return j.dump() + '\n';
}

std::string triangle_csv(const BivarTriangle &t) {
  std::string out = "n,m,coeff\n";
  for (std::size_t n = 0; n <= t.order(); ++n)
    for (const auto &[e, c] : t.row(n))
      out += std::to_string(n) + ',' + std::to_string(e) + ',' + c.get_str() +
             '\n';
  return out;
}

} // namespace appell::io

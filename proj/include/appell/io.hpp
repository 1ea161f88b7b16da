#pragma once

// Text formats shared by the CLI and the golden-file tests.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "appell/series.hpp"
#include "appell/sieve.hpp"

namespace appell::io {

enum class OutputFormat { csv, json, plain };

OutputFormat parse_format(std::string_view s); // throws DomainError

// Nonnegative integer: decimal digits or "B^E" (e.g. "10^7").
std::uint64_t parse_count(std::string_view s);
// "P/Q" or "P"; throws DomainError on malformed input or Q = 0.
Rational parse_rational(std::string_view s);
std::vector<std::uint64_t> parse_count_list(std::string_view s);

// "n,h" header then one line per n, ascending.
void write_table_csv(std::FILE *out, const HTable &t);
void write_table_plain(std::FILE *out, const HTable &t);
void write_table_json(std::FILE *out, const HTable &t);

// CountReport; `only` restricts the rows (every ell listed, zero counts
// included); empty means every ell with a nonzero count.
std::string count_report_csv(const CountReport &r,
                             const std::vector<std::uint64_t> &only = {});
std::string count_report_json(const CountReport &r,
                              const std::vector<std::uint64_t> &only = {});

std::string series_csv(const TruncSeries &s);
std::string series_json(const TruncSeries &s);

// "n,m,coeff" for nonzero entries, ascending n then m.
std::string triangle_csv(const BivarTriangle &t);

} // namespace appell::io

// appell: command-line front end.
//
// Exit codes: 0 success, 1 a verification found a counterexample,
// 2 usage or precondition error. Data goes to stdout, diagnostics to stderr.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "appell/errors.hpp"
#include "appell/families.hpp"
#include "appell/halfappell.hpp"
#include "appell/io.hpp"
#include "appell/krank.hpp"
#include "appell/selftest.hpp"
#include "appell/sieve.hpp"
#include "appell/sptcrank.hpp"

namespace {

using namespace appell;
using io::OutputFormat;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
public:
  using Error::Error;
};

void out(const std::string &s) { std::fwrite(s.data(), 1, s.size(), stdout); }

struct Options {
  std::string format = "csv";
  int threads = 0;

  std::int64_t m = 0;
  std::int64_t k = 1;
  std::string n;
  std::string order;
  std::string limit;
  std::string method = "direct";
  std::string out_file;
  std::string values;
  std::string lo, hi;
  std::string lemma;
  std::string p, q;
  unsigned t = 1;
  std::string value, count = "1", budget = "10^7";
  bool moments = false, oracle = false;
  std::string kind;
  std::optional<std::int64_t> fixed_m;
  bool verify_nonneg = false, verify_c1 = false;
  bool quick = false, full = false;
  std::string checkpoints;
  unsigned r = 0;
};

std::size_t as_order(const std::string &s) {
  return static_cast<std::size_t>(io::parse_count(s));
}

int cmd_coeff(const Options &o, OutputFormat fmt) {
  const Params p(o.m, o.k);
  const std::uint64_t n = io::parse_count(o.n);
  const std::uint64_t h = h_divisor(p, n);
  if (fmt == OutputFormat::json)
    out(nlohmann::ordered_json{{"m", o.m}, {"k", o.k}, {"n", n}, {"h", h}}.dump() +
        "\n");
  else
    out(std::to_string(h) + "\n");
  return kOk;
}

int cmd_series(const Options &o, OutputFormat fmt) {
  const Params p(o.m, o.k);
  const std::size_t order = as_order(o.order);
  TruncSeries s;
  if (o.method == "direct") {
    s = h_series_direct(p, order);
  } else if (o.method == "identity") {
    s = h_series_identity(p, order);
  } else if (o.method == "legacy") {
    if (!(p == Params(1, 1)))
      throw UsageError("--method legacy only computes (m,k) = (1,1)");
    s = h_series_legacy(order);
  } else {
    throw UsageError("unknown --method '" + o.method + "'");
  }
  switch (fmt) {
  case OutputFormat::csv:
    out(io::series_csv(s));
    break;
  case OutputFormat::json:
    out(io::series_json(s));
    break;
  case OutputFormat::plain:
    out(s.dump());
    break;
  }
  return kOk;
}

int cmd_table(const Options &o, OutputFormat fmt) {
  const HTable t = build_table(Params(o.m, o.k), io::parse_count(o.limit));
  std::FILE *dst = stdout;
  if (!o.out_file.empty()) {
    dst = std::fopen(o.out_file.c_str(), "wb");
    if (!dst)
      throw UsageError("cannot open " + o.out_file + " for writing");
  }
  switch (fmt) {
  case OutputFormat::csv:
    io::write_table_csv(dst, t);
    break;
  case OutputFormat::json:
    io::write_table_json(dst, t);
    break;
  case OutputFormat::plain:
    io::write_table_plain(dst, t);
    break;
  }
  if (dst != stdout)
    std::fclose(dst);
  return kOk;
}

int cmd_count(const Options &o, OutputFormat fmt) {
  const CountReport r =
      count_values(build_table(Params(o.m, o.k), io::parse_count(o.limit)));
  const auto only = o.values.empty() ? std::vector<std::uint64_t>{}
                                     : io::parse_count_list(o.values);
  out(fmt == OutputFormat::json ? io::count_report_json(r, only)
                                : io::count_report_csv(r, only));
  return r.total == r.limit + 1 ? kOk : kVerifyFailed;
}

int cmd_density(const Options &o, OutputFormat fmt) {
  const auto cps = io::parse_count_list(o.checkpoints);
  const auto rows = zero_density_scan(Params(o.m, o.k), cps);
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &d : rows)
      arr.push_back({{"x", d.x}, {"zeros", d.zeros}, {"ratio", d.ratio}});
    out(arr.dump() + "\n");
  } else {
    std::string s = "x,zeros,ratio\n";
    char buf[64];
    for (const auto &d : rows) {
      std::snprintf(buf, sizeof buf, "%.9f", d.ratio);
      s += std::to_string(d.x) + ',' + std::to_string(d.zeros) + ',' + buf + '\n';
    }
    out(s);
  }
  return kOk;
}

int cmd_fordh(const Options &o, OutputFormat fmt) {
  const std::uint64_t x = io::parse_count(o.limit);
  const std::uint64_t h =
      ford_H(x, io::parse_rational(o.lo), io::parse_rational(o.hi));
  if (fmt == OutputFormat::json)
    out(nlohmann::ordered_json{{"x", x}, {"lo", o.lo}, {"hi", o.hi}, {"H", h}}
            .dump() +
        "\n");
  else
    out(std::to_string(h) + "\n");
  return kOk;
}

int cmd_doubling(const Options &o, OutputFormat fmt) {
  const Params p(o.m, o.k);
  const std::uint64_t n = io::parse_count(o.n);
  const DoublingSplit s = doubling_difference(p, n, o.r);
  const std::uint64_t lhs = h_divisor(p, n << (o.r + 1));
  const std::uint64_t rhs = h_divisor(p, n << o.r);
  const bool ok = lhs - rhs == s.total() && lhs >= rhs;
  if (fmt == OutputFormat::json)
    out(nlohmann::ordered_json{{"n", n}, {"r", o.r}, {"countA", s.count_a},
                               {"countB", s.count_b}, {"pass", ok}}
            .dump() +
        "\n");
  else
    out("countA,countB\n" + std::to_string(s.count_a) + ',' +
        std::to_string(s.count_b) + '\n');
  return ok ? kOk : kVerifyFailed;
}

int cmd_witness(const Options &o) {
  const Params p0(o.m, o.k);
  auto need = [](const std::string &v, const char *flag) {
    if (v.empty())
      throw UsageError(std::string("missing ") + flag);
    return io::parse_count(v);
  };
  if (o.lemma == "search") {
    const std::uint64_t value = need(o.value, "--value");
    std::vector<WitnessReport> found;
    bool exhausted = false;
    try {
      found = witnesses_for_value(p0, value, io::parse_count(o.count),
                                  io::parse_count(o.budget));
    } catch (const BudgetExhausted &e) {
      std::cerr << "appell: " << e.what() << '\n';
      found = e.partial();
      exhausted = true;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto &w : found) {
      arr.push_back(to_json(w));
      all = all && w.pass;
    }
    out(arr.dump() + "\n");
    return (all && !exhausted) ? kOk : kVerifyFailed;
  }
  WitnessReport w = [&] {
    if (o.lemma == "22")
      return lemma22_witness(p0, need(o.p, "--p"));
    if (o.lemma == "23")
      return lemma23_witness(p0, need(o.p, "--p"));
    if (o.lemma == "24")
      return lemma24_witness(p0, need(o.p, "--p"), need(o.q, "--q"), o.t);
    throw UsageError("--lemma must be 22, 23, 24 or search");
  }();
  out(to_json(w).dump() + "\n");
  return w.pass ? kOk : kVerifyFailed;
}

int cmd_krank(const Options &o, OutputFormat fmt) {
  const KrankParams kp(o.k, o.m);
  const std::size_t order = as_order(o.order);
  if (o.oracle) {
    if (kp.k() != 2)
      throw UsageError("--oracle compares against Dyson's rank, needs --k 2");
    const TruncSeries s = nk_series(kp, order);
    bool ok = true;
    std::string rows = "n,m,series,oracle\n";
    for (std::size_t n = 0; n <= order; ++n) {
      const auto hist = dyson_rank_oracle(n);
      const auto it = hist.find(kp.m());
      const std::uint64_t want = it == hist.end() ? 0 : it->second;
      ok = ok && s[n] == static_cast<unsigned long>(want);
      rows += std::to_string(n) + ',' + std::to_string(kp.m()) + ',' +
              s[n].get_str() + ',' + std::to_string(want) + '\n';
    }
    if (fmt == OutputFormat::json)
      out(nlohmann::ordered_json{{"check", "dyson_rank_oracle"},
                                 {"k", kp.k()}, {"m", kp.m()},
                                 {"order", order}, {"pass", ok}}
              .dump() +
          "\n");
    else
      out(rows);
    return ok ? kOk : kVerifyFailed;
  }
  if (o.moments) {
    const TruncSeries dagger = nk_dagger_series(kp, order);
    bool ok = true;
    std::string rows = "n,moment\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= order; ++n) {
      ok = ok && moment_sum(kp, n, order) == dagger[n];
      rows += std::to_string(n) + ',' + dagger[n].get_str() + '\n';
      arr.push_back(dagger[n].get_str());
    }
    if (fmt == OutputFormat::json)
      out(nlohmann::ordered_json{{"k", kp.k()}, {"m", kp.m()},
                                 {"moments", arr}, {"pass", ok}}
              .dump() +
          "\n");
    else
      out(rows);
    if (!ok)
      std::cerr << "appell: moment identity failed\n";
    return ok ? kOk : kVerifyFailed;
  }
  const TruncSeries s = nk_series(kp, order);
  if (fmt == OutputFormat::json) {
    out(io::series_json(s));
  } else {
    std::string rows = "n,m,count\n";
    for (std::size_t n = 0; n <= order; ++n)
      rows += std::to_string(n) + ',' + std::to_string(kp.m()) + ',' +
              s[n].get_str() + '\n';
    out(rows);
  }
  return kOk;
}

int cmd_spt(const Options &o, OutputFormat fmt) {
  const SptKind kind = spt_kind_from_string(o.kind);
  const std::size_t order = as_order(o.order);
  const int modes = (o.fixed_m ? 1 : 0) + o.verify_nonneg + o.verify_c1;
  if (modes > 1)
    throw UsageError("--fixed-m, --verify-nonneg and --verify-c1-relation "
                     "are mutually exclusive");
  if (o.verify_nonneg || o.verify_c1) {
    const VerifyReport r =
        o.verify_c1 ? verify_mc1_relation(order) : verify_nonneg(kind, order);
    out(to_json(r).dump() + "\n");
    return r.pass ? kOk : kVerifyFailed;
  }
  if (o.fixed_m) {
    if (kind != SptKind::C5)
      throw UsageError("--fixed-m is available for --kind C5 only");
    const TruncSeries s = mc5_fixed_m_series(*o.fixed_m, order);
    out(fmt == OutputFormat::json ? io::series_json(s) : io::series_csv(s));
    return kOk;
  }
  const BivarTriangle t = bivariate_expand(kind, order);
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= t.order(); ++n) {
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (const auto &[e, c] : t.row(n))
        row[std::to_string(e)] = c.get_str();
      rows.push_back(row);
    }
    out(nlohmann::ordered_json{{"kind", to_string(kind)}, {"order", order},
                               {"rows", rows}}
            .dump() +
        "\n");
  } else {
    out(io::triangle_csv(t));
  }
  return kOk;
}

int cmd_selftest(const Options &o) {
  if (o.quick && o.full)
    throw UsageError("choose one of --quick and --full");
  std::ostringstream log;
  const bool ok =
      run_selftest(o.full ? SelftestLevel::full : SelftestLevel::quick, log);
  out(log.str());
  return ok ? kOk : kVerifyFailed;
}

void add_mk(CLI::App *sub, Options &o, bool required = true) {
  auto *m = sub->add_option("-m,--m", o.m, "m >= 0");
  auto *k = sub->add_option("-k,--k", o.k, "odd k >= 1");
  if (required) {
    m->required();
    k->required();
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Half Appell sum coefficients, witnesses and partition "
               "moment identities"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "csv | json | plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}));
  app.add_option("--threads", o.threads, "worker threads (default: all cores)")
      ->check(CLI::NonNegativeNumber);

  auto *coeff = app.add_subcommand("coeff", "single h_{m,k}(n)");
  add_mk(coeff, o);
  coeff->add_option("-n,--n", o.n, "index n")->required();

  auto *series = app.add_subcommand("series", "H_{m,k}(q) to a given order");
  add_mk(series, o);
  series->add_option("--order", o.order)->required();
  series->add_option("--method", o.method, "direct | identity | legacy");

  auto *table = app.add_subcommand("table", "h_{m,k}(n) for 0 <= n <= limit");
  add_mk(table, o);
  table->add_option("--limit", o.limit)->required();
  table->add_option("--out", o.out_file, "write to FILE instead of stdout");

  auto *count = app.add_subcommand("count", "S_{m,k}(ell; x) histogram");
  add_mk(count, o);
  count->add_option("--limit", o.limit)->required();
  count->add_option("--values", o.values, "comma-separated ell values");

  auto *density = app.add_subcommand("density", "S_{m,k}(0; x) at checkpoints");
  add_mk(density, o);
  density->add_option("--checkpoints", o.checkpoints, "ascending x values")
      ->required();

  auto *fordh = app.add_subcommand("fordh", "Ford's H(x, y, z)");
  fordh->add_option("--limit", o.limit)->required();
  fordh->add_option("--lo", o.lo, "y as P/Q")->required();
  fordh->add_option("--hi", o.hi, "z as P/Q")->required();

  auto *doubling = app.add_subcommand(
      "doubling", "split h(2^{r+1}n) - h(2^r n) for odd n");
  add_mk(doubling, o);
  doubling->add_option("-n,--n", o.n)->required();
  doubling->add_option("--r", o.r);

  auto *witness = app.add_subcommand("witness", "prime-family witnesses");
  add_mk(witness, o);
  witness->add_option("--lemma", o.lemma, "22 | 23 | 24 | search")->required();
  witness->add_option("--p", o.p);
  witness->add_option("--q", o.q);
  witness->add_option("--t", o.t);
  witness->add_option("--value", o.value);
  witness->add_option("--count", o.count);
  witness->add_option("--budget", o.budget);

  auto *krank = app.add_subcommand("krank", "Garvan k-rank counts and moments");
  krank->add_option("-k,--k", o.k)->required();
  krank->add_option("-m,--m", o.m)->required();
  krank->add_option("--order", o.order)->required();
  krank->add_flag("--moments", o.moments);
  krank->add_flag("--oracle", o.oracle);

  auto *spt = app.add_subcommand("spt", "spt-crank-type coefficient triangles");
  spt->add_option("--kind", o.kind, "S | C1 | C5")->required();
  spt->add_option("--order", o.order)->required();
  spt->add_option("--fixed-m", o.fixed_m);
  spt->add_flag("--verify-nonneg", o.verify_nonneg);
  spt->add_flag("--verify-c1-relation", o.verify_c1);

  auto *selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_flag("--quick", o.quick);
  selftest->add_flag("--full", o.full);

  for (CLI::App *sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  if (o.threads > 0)
    omp_set_num_threads(o.threads);

  try {
    const OutputFormat fmt = io::parse_format(o.format);
    int rc = kUsage;
    if (*coeff)
      rc = cmd_coeff(o, fmt);
    else if (*series)
      rc = cmd_series(o, fmt);
    else if (*table)
      rc = cmd_table(o, fmt);
    else if (*count)
      rc = cmd_count(o, fmt);
    else if (*density)
      rc = cmd_density(o, fmt);
    else if (*fordh)
      rc = cmd_fordh(o, fmt);
    else if (*doubling)
      rc = cmd_doubling(o, fmt);
    else if (*witness)
      rc = cmd_witness(o);
    else if (*krank)
      rc = cmd_krank(o, fmt);
    else if (*spt)
      rc = cmd_spt(o, fmt);
    else if (*selftest)
      rc = cmd_selftest(o);
    std::fflush(stdout);
    return rc;
  } catch (const Error &e) {
    std::fflush(stdout);
    std::cerr << "appell: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "appell: " << e.what() << '\n';
    return kUsage;
  }
}

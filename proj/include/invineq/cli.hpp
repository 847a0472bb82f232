#pragma once

#include "invineq/charpoly.hpp"
#include "invineq/identities.hpp"
#include "invineq/rational.hpp"
#include "invineq/serialize.hpp"
#include "invineq/spectra.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace invineq::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, undecided = 3 };

enum class Format { json, csv, text };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NRange {
  unsigned long first = 2;
  unsigned long last = 50;
};

struct RunConfig {
  std::string command;
  std::string identity_set = "all";  // verify
  std::string dump_kind = "fpoly";   // dump
  NRange range;
  std::optional<std::vector<unsigned long>> ns;  // asymptotics --ns
  Rational tolerance = default_tolerance();
  unsigned bits = FixedReal::default_bits;
  Format format = Format::json;
  std::optional<std::string> out;
  unsigned jobs = 1;
};

inline NRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError("malformed range '" + text + "', expected A..B");
    return std::stoul(s);
  };
  NRange r;
  if (dots == std::string::npos) {
    r.first = r.last = number(text);
  } else {
    r.first = number(text.substr(0, dots));
    r.last = number(text.substr(dots + 2));
  }
  if (r.first > r.last) throw UsageError("empty range '" + text + "'");
  return r;
}

inline Rational parse_tolerance(const std::string& text) {
  Rational t;
  try {
    t = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed tolerance '" + text + "'");
  }
  if (t <= 0) throw UsageError("tolerance must be positive");
  return t;
}

inline Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw UsageError("unknown format '" + text + "'");
}

/// Runs tasks[i] on a pool of `jobs` threads; results come back in index order.
template <class R>
std::vector<R> run_pool(const std::vector<std::function<R()>>& tasks, unsigned jobs) {
  std::vector<std::optional<R>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        slots[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<R> out;
  out.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

/// One emitted record. `status` drives the exit code.
struct Row {
  unsigned long n = 0;
  std::string key;  // secondary sort key, e.g. the identity name
  int status = ok;
  json data;
  std::string csv;
  std::string text;
};

inline void emit(std::vector<Row> rows, const RunConfig& cfg, const std::string& csv_header, std::ostream& out) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.n != b.n ? a.n < b.n : a.key < b.key; });
  if (cfg.format == Format::csv) out << csv_header << '\n';
  for (const auto& r : rows) {
    switch (cfg.format) {
      case Format::json: out << r.data.dump() << '\n'; break;
      case Format::csv: out << r.csv << '\n'; break;
      case Format::text: out << r.text << '\n'; break;
    }
  }
}

inline int combine(const std::vector<Row>& rows) {
  int code = ok;
  for (const auto& r : rows) {
    if (r.status == failure) return failure;
    if (r.status == undecided) code = undecided;
  }
  return code;
}

// ---- verify -----------------------------------------------------------------

inline const std::vector<std::string>& identity_sets() {
  static const std::vector<std::string> sets = {"thm31",    "corollary", "inverse",  "cauchy",   "recurrence",
                                                "boundary", "legendre",  "kronecker", "all"};
  return sets;
}

inline Row det_row(const DetReport& r) {
  const std::string id(name(r.identity));
  return {r.n, id, r.equal ? ok : failure, to_json(r),
          std::to_string(r.n) + "," + id + "," + (r.equal ? "true" : "false"),
          "n=" + std::to_string(r.n) + " " + id + (r.equal ? " equal" : " NOT EQUAL")};
}

inline Row simple_row(unsigned long n, const std::string& id, bool equal, json extra) {
  json data = {{"n", n}, {"identity", id}};
  for (auto& [k, v] : extra.items()) data[k] = v;
  data["equal"] = equal;
  return {n, id, equal ? ok : failure, data,
          std::to_string(n) + "," + id + "," + (equal ? "true" : "false"),
          "n=" + std::to_string(n) + " " + id + (equal ? " equal" : " NOT EQUAL")};
}

/// Deterministic rational samples for the Kronecker determinant check.
inline std::vector<Rational> kronecker_samples(unsigned long n) {
  std::mt19937_64 rng(0x5eed + n);
  std::uniform_int_distribution<long> num(-200, 200), den(1, 37);
  std::vector<Rational> s;
  for (int k = 0; k < 3; ++k) s.push_back(make_rational(num(rng), den(rng)));
  return s;
}

inline std::vector<std::function<Row()>> verify_tasks(const std::string& set, const NRange& range) {
  std::vector<std::function<Row()>> tasks;
  const bool all = set == "all";
  for (unsigned long n = range.first; n <= range.last; ++n) {
    if (all || set == "thm31") {
      tasks.emplace_back([n] { return det_row(verify_thm31(Parity::even, n)); });
      if (n >= 1) tasks.emplace_back([n] { return det_row(verify_thm31(Parity::odd, n)); });
    }
    if ((all || set == "corollary") && n >= 1)
      tasks.emplace_back([n] { return det_row(verify_corollary_full(n)); });
    if ((all || set == "inverse") && n >= 1) {
      for (Parity p : {Parity::even, Parity::odd}) {
        tasks.emplace_back([n, p] {
          const auto r = verify_inverse_identity(p, n);
          json extra = json::object();
          if (r.failing_row) {
            extra["failing_row"] = *r.failing_row;
            extra["residual"] = to_json(r.residual);
          }
          return simple_row(n, "inverse-" + std::to_string(ell(p)), r.ok, extra);
        });
      }
    }
    if (all || set == "cauchy") {
      tasks.emplace_back([n] { return det_row(verify_cauchy(Parity::even, n)); });
      tasks.emplace_back([n] { return det_row(verify_cauchy(Parity::odd, n)); });
    }
    if (all || set == "recurrence") {
      tasks.emplace_back([n] {
        const Polynomial res = recurrence_residual(n);
        json extra = json::object();
        if (!res.is_zero()) extra["residual"] = to_json(res);
        return simple_row(n, "recurrence", res.is_zero(), extra);
      });
    }
    if (all || set == "boundary") {
      for (BoundaryVariant v : {BoundaryVariant::even, BoundaryVariant::odd, BoundaryVariant::full})
        tasks.emplace_back([n, v] { return det_row(verify_boundary(v, n)); });
    }
    if (all || set == "legendre") {
      tasks.emplace_back([n] { return det_row(verify_legendre_hook(Parity::even, n)); });
      tasks.emplace_back([n] { return det_row(verify_legendre_hook(Parity::odd, n)); });
    }
    if ((all || set == "kronecker") && n >= 1) {
      tasks.emplace_back([n] {
        bool equal = true;
        json samples = json::array();
        for (const auto& s : kronecker_samples(n)) {
          const KronReport r = verify_kron_factorization(n, s);
          equal = equal && r.ok();
          samples.push_back({{"sample", to_string(s)},
                             {"mass_factorizes", r.mass_factorizes},
                             {"stiffness_factorizes", r.stiffness_factorizes},
                             {"lhs", to_string(r.lhs)},
                             {"rhs", to_string(r.rhs)}});
        }
        return simple_row(n, "kronecker", equal, {{"samples", samples}});
      });
    }
  }
  return tasks;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto& sets = identity_sets();
  if (std::find(sets.begin(), sets.end(), cfg.identity_set) == sets.end())
    throw UsageError("unknown identity set '" + cfg.identity_set + "'");
  auto rows = run_pool(verify_tasks(cfg.identity_set, cfg.range), cfg.jobs);
  emit(rows, cfg, "n,identity,equal", out);
  return combine(rows);
}

// ---- bounds -----------------------------------------------------------------

inline std::string bound_text(const BoundReport& r, unsigned bits) {
  const unsigned d = std::min(decimal_digits(bits), 20u);
  return "n=" + std::to_string(r.n) + " m=" + r.m_lower.to_decimal(d) +
         " lambda=[" + FixedReal::from_rational(r.lambda.lo, bits).to_decimal(d) + ", " +
         FixedReal::from_rational(r.lambda.hi, bits).to_decimal(d) + "] f1=" + to_string(r.f1) +
         " M=" + r.M_upper.to_decimal(d) + " [m " + std::string(name(r.m_vs_lambda)) + ", f1 " +
         std::string(name(r.lambda_vs_f1)) + ", M " + std::string(name(r.lambda_vs_M)) + "]" +
         (r.undecided() ? " UNDECIDED" : r.ok() ? " ok" : " FAILED");
}

inline void require_at_least_two(const NRange& range, const char* command) {
  if (range.first < 2) throw UsageError(std::string(command) + " needs n >= 2");
}

inline int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  require_at_least_two(cfg.range, "bounds");
  std::vector<std::function<Row()>> tasks;
  for (unsigned long n = cfg.range.first; n <= cfg.range.last; ++n) {
    tasks.emplace_back([n, &cfg] {
      const BoundReport r = compute_bounds(n, cfg.tolerance, cfg.bits);
      const int status = r.undecided() ? undecided : r.ok() ? ok : failure;
      return Row{n, "", status, to_json(r, cfg.bits), to_csv(r, cfg.bits), bound_text(r, cfg.bits)};
    });
  }
  auto rows = run_pool(tasks, cfg.jobs);
  emit(rows, cfg, bounds_csv_header(), out);
  return combine(rows);
}

// ---- figure -----------------------------------------------------------------

inline int cmd_figure(const RunConfig& cfg, std::ostream& out) {
  require_at_least_two(cfg.range, "figure");
  std::vector<std::function<RootTable()>> tasks;
  for (unsigned long n = cfg.range.first; n <= cfg.range.last; ++n)
    tasks.emplace_back([n, &cfg] { return all_roots(n, cfg.tolerance); });
  const auto tables = run_pool(tasks, cfg.jobs);
  std::vector<Row> rows;
  for (const auto& t : tables) {
    const auto lines = figure_rows(t, cfg.bits);
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const auto& e = t.roots[k];
      json data = {{"n", t.n}, {"root", to_json(e)}, {"parity", t.n % 2}};
      rows.push_back({t.n, "", ok, data, lines[k], lines[k]});
    }
  }
  emit(rows, cfg, figure_csv_header(), out);
  return ok;
}

// ---- asymptotics ------------------------------------------------------------

inline int cmd_asymptotics(const RunConfig& cfg, std::ostream& out) {
  std::vector<unsigned long> ns;
  if (cfg.ns) {
    ns = *cfg.ns;
  } else {
    for (unsigned long n = cfg.range.first; n <= cfg.range.last; ++n) ns.push_back(n);
  }
  for (unsigned long n : ns)
    if (n < 2) throw UsageError("asymptotics needs n >= 2");
  std::vector<std::function<Row()>> tasks;
  for (unsigned long n : ns) {
    tasks.emplace_back([n, &cfg] {
      const AsymptoticRow r = asymptotic_row(n, cfg.tolerance, cfg.bits);
      const std::string csv = to_csv(r, cfg.bits);
      return Row{n, "", ok, to_json(r, cfg.bits), csv, csv};
    });
  }
  auto rows = run_pool(tasks, cfg.jobs);
  emit(rows, cfg, asymptotics_csv_header(), out);
  return combine(rows);
}

// ---- boundary ---------------------------------------------------------------

inline int cmd_boundary(const RunConfig& cfg, std::ostream& out) {
  if (cfg.range.first < 1) throw UsageError("boundary needs n >= 1");
  std::vector<std::function<Row()>> tasks;
  for (unsigned long n = cfg.range.first; n <= cfg.range.last; ++n) {
    tasks.emplace_back([n] {
      const BoundaryResult mu = boundary_largest_root(n);
      bool equal = mu.equal;
      json checks = json::array();
      for (BoundaryVariant v : {BoundaryVariant::even, BoundaryVariant::odd, BoundaryVariant::full}) {
        const DetReport r = verify_boundary(v, n);
        equal = equal && r.equal;
        checks.push_back({{"identity", std::string(name(r.identity))}, {"equal", r.equal}});
      }
      json data = {{"n", n},
                   {"mu", to_string(mu.largest_root)},
                   {"mu_closed_form", to_string(mu.closed_form)},
                   {"mu_equal", mu.equal},
                   {"determinant", to_json(mu.determinant)},
                   {"identities", checks},
                   {"ok", equal}};
      std::string csv = std::to_string(n) + "," + to_string(mu.largest_root) + "," + to_string(mu.closed_form) +
                        "," + (equal ? "true" : "false");
      std::string text = "n=" + std::to_string(n) + " mu=" + to_string(mu.largest_root) +
                         (equal ? " ok" : " FAILED (closed form " + to_string(mu.closed_form) + ")");
      return Row{n, "", equal ? ok : failure, data, csv, text};
    });
  }
  auto rows = run_pool(tasks, cfg.jobs);
  emit(rows, cfg, "n,mu,mu_closed_form,ok", out);
  return combine(rows);
}

// ---- dump -------------------------------------------------------------------

inline const std::vector<std::string>& dump_kinds() {
  static const std::vector<std::string> kinds = {"fpoly", "mass",      "stiffness", "A",     "B",
                                                 "pencil", "parity0",  "parity1",   "boundary0",
                                                 "boundary1", "boundary", "hook0",   "hook1"};
  return kinds;
}

inline json dump_one(const std::string& kind, unsigned long n) {
  if (kind == "fpoly") return to_json(char_poly(n));
  json m;
  if (kind == "mass") m = to_json(build_mass(n));
  else if (kind == "stiffness") m = to_json(build_stiffness(n));
  else if (kind == "A") m = to_json(build_A(n));
  else if (kind == "B") m = to_json(build_B(n));
  else if (kind == "pencil") m = to_json(build_pencil(n));
  else if (kind == "parity0") m = to_json(build_parity_block(Parity::even, n));
  else if (kind == "parity1") m = to_json(build_parity_block(Parity::odd, n));
  else if (kind == "boundary0") m = to_json(build_boundary(BoundaryVariant::even, n));
  else if (kind == "boundary1") m = to_json(build_boundary(BoundaryVariant::odd, n));
  else if (kind == "boundary") m = to_json(build_boundary(BoundaryVariant::full, n));
  else if (kind == "hook0") m = to_json(build_legendre_hook(Parity::even, n));
  else m = to_json(build_legendre_hook(Parity::odd, n));
  return {{"n", n}, {"kind", kind}, {"matrix", m}};
}

inline int cmd_dump(const RunConfig& cfg, std::ostream& out) {
  const auto& kinds = dump_kinds();
  if (std::find(kinds.begin(), kinds.end(), cfg.dump_kind) == kinds.end())
    throw UsageError("unknown dump kind '" + cfg.dump_kind + "'");
  if (cfg.format != Format::json) throw UsageError("dump only supports --format json");
  for (unsigned long n = cfg.range.first; n <= cfg.range.last; ++n) out << dump_one(cfg.dump_kind, n).dump() << '\n';
  return ok;
}

// ---- entry point ------------------------------------------------------------

inline int execute(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "bounds") return cmd_bounds(cfg, out);
  if (cfg.command == "figure") return cmd_figure(cfg, out);
  if (cfg.command == "asymptotics") return cmd_asymptotics(cfg, out);
  if (cfg.command == "boundary") return cmd_boundary(cfg, out);
  if (cfg.command == "dump") return cmd_dump(cfg, out);
  throw UsageError("unknown command '" + cfg.command + "'");
}

/// Parses argv (without the program name) and runs the command. Reports go
/// to `out` unless --out is given; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the inverse-inequality eigenvalue problem", "invineq"};
  app.require_subcommand(1);

  std::string range_text = "2..50", tol_text = "1e-12", format_text, ns_text;
  std::optional<std::string> out_path;
  unsigned bits = FixedReal::default_bits, jobs = 1;
  std::string identity_set = "all", dump_kind = "fpoly";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--range", range_text, "n range A..B (default 2..50)");
    sub->add_option("--tol", tol_text, "enclosure width, P/Q or decimal (default 1e-12)");
    sub->add_option("--bits", bits, "binary precision of decimal output (>= 64)");
    sub->add_option("--format", format_text, "json | csv | text (figure defaults to csv, others to json)")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "write the report to this file");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "check determinant and polynomial identities");
  verify->add_option("identities", identity_set, "thm31|corollary|inverse|cauchy|recurrence|boundary|legendre|kronecker|all");
  common(verify);
  common(app.add_subcommand("bounds", "m(n) <= lambda_n <= f_1(n), lambda_n <= M(n)"));
  common(app.add_subcommand("figure", "all roots of F_n, CSV n,root,parity"));
  auto* asym = app.add_subcommand("asymptotics", "ratios against the limiting constants");
  asym->add_option("--ns", ns_text, "comma-separated n values, overrides --range");
  common(asym);
  common(app.add_subcommand("boundary", "largest boundary eigenvalue and its determinants"));
  auto* dump = app.add_subcommand("dump", "F_n coefficients or assembled matrices as JSON");
  dump->add_option("kind", dump_kind, "fpoly|mass|stiffness|A|B|pencil|parity0|parity1|boundary0|boundary1|boundary|hook0|hook1");
  common(dump);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  RunConfig cfg;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.identity_set = identity_set;
    cfg.dump_kind = dump_kind;
    cfg.range = parse_range(range_text);
    cfg.tolerance = parse_tolerance(tol_text);
    if (bits < 64) throw UsageError("--bits must be at least 64");
    cfg.bits = bits;
    cfg.format = format_text.empty() ? (cfg.command == "figure" ? Format::csv : Format::json)
                                     : parse_format(format_text);
    cfg.out = out_path;
    cfg.jobs = jobs;
    if (!ns_text.empty()) {
      std::vector<unsigned long> ns;
      std::size_t start = 0;
      while (start <= ns_text.size()) {
        const auto comma = std::min(ns_text.find(',', start), ns_text.size());
        ns.push_back(parse_range(ns_text.substr(start, comma - start)).first);
        start = comma + 1;
      }
      cfg.ns = ns;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (cfg.out) {
      std::ofstream file(*cfg.out);
      if (!file) {
        err << "error: cannot open " << *cfg.out << '\n';
        return usage;
      }
      return execute(cfg, file);
    }
    return execute(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace invineq::cli

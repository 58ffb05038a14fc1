#include "splitperm/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "splitperm/counting.hpp"
#include "splitperm/identities.hpp"
#include "splitperm/oracle.hpp"
#include "splitperm/permutation.hpp"
#include "splitperm/series.hpp"
#include "splitperm/split_pattern.hpp"

namespace splitperm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct TableArgs {
  long n_max = 0;
  long r_max = -1;
  std::string format = "csv";
};

struct CountArgs {
  long r = 0;
  long n = 0;
  std::string method = "formula";
};

struct CheckArgs {
  std::string perm;
  int r = 0;
};

struct EnumerateArgs {
  int r = 0;
  int n = 0;
  std::string format = "lines";
};

struct VerifyArgs {
  std::string target = "all";
  int order = kDefaultSeriesOrder;
  int n_max = 7;
  std::string format = "text";
};

struct SeriesArgs {
  std::string name;
  int order = kDefaultSeriesOrder;
};

Json witness_json(const std::optional<PatternWitness>& w) {
  if (!w) return nullptr;
  return Json(w->indices);
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const CountTable table = build_table(a.n_max);
  out << (a.format == "json" ? table.to_json(a.r_max) : table.to_csv(a.r_max));
  return kOk;
}

int cmd_count(const CountArgs& a, int limit, std::ostream& out, std::ostream& err) {
  if (a.r < 0 || a.r > a.n) {
    err << "count: need 0 <= r <= n\n";
    return kUsage;
  }
  if (a.method == "formula") {
    out << to_decimal(k_closed(a.r, a.n)) << '\n';
  } else if (a.method == "corollary") {
    if (a.r < 1) {
      err << "count: the corollary route needs r >= 1\n";
      return kUsage;
    }
    out << to_decimal(k_via_corollary(a.r, a.n)) << '\n';
  } else {
    out << to_decimal(brute_count(static_cast<int>(a.r), static_cast<int>(a.n), limit)) << '\n';
  }
  return kOk;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  Permutation w;
  try {
    w = parse_permutation(a.perm);
  } catch (const std::invalid_argument& e) {
    err << "check: " << e.what() << '\n';
    return kUsage;
  }
  if (a.r < 0 || a.r > w.size()) {
    err << "check: need 0 <= r <= " << w.size() << '\n';
    return kUsage;
  }
  const auto w312 = contains_split(w, pattern_3_12(), a.r);
  const auto w231 = contains_split(w, pattern_23_1(), a.r);
  const bool avoids = !w312 && !w231;
  Json doc;
  doc["avoids"] = avoids;
  // The Grassmannian Gr(r,n) needs 1 <= r <= n.
  doc["fiber_bundle"] = a.r >= 1 ? Json(is_fiber_bundle(w, a.r)) : Json(nullptr);
  doc["witness_3_12"] = witness_json(w312);
  doc["witness_23_1"] = witness_json(w231);
  out << doc.dump() << '\n';
  return avoids ? kOk : kContains;
}

int cmd_enumerate(const EnumerateArgs& a, int limit, std::ostream& out, std::ostream& err) {
  if (a.r < 0 || a.r > a.n) {
    err << "enumerate: need 0 <= r <= n\n";
    return kUsage;
  }
  const auto members = enumerate_K(a.r, a.n, limit);
  if (a.format == "json") {
    Json doc = Json::array();
    for (const auto& w : members) doc.push_back(to_string(w));
    out << doc.dump() << '\n';
    return kOk;
  }
  if (a.format == "csv") out << "perm\n";
  for (const auto& w : members) {
    // n > 9 uses commas, which would split a CSV field
    if (a.format == "csv" && a.n > 9) {
      out << '"' << to_string(w) << "\"\n";
    } else {
      out << to_string(w) << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, int limit, std::ostream& out, std::ostream& err) {
  const bool all = a.target == "all";
  const bool combinatorial = all || a.target == "fibers" || a.target == "oracle";
  if (combinatorial && a.n_max > limit) throw GuardExceeded(a.n_max, limit);

  VerificationReport report;
  if (all || a.target == "bessel") report.append(verify_bessel(a.order));
  if (all || a.target == "main2") report.append(verify_main_theorem(a.order));
  if (all || a.target == "recursion") report.append(check_recursion(a.order, a.order));
  if (all || a.target == "symmetry") {
    report.append(check_closed_form_symmetry(30));
    report.append(check_series_symmetry(a.order));
  }
  if (all || a.target == "fibers") {
    report.append(check_predicates(a.n_max, limit));
    report.append(check_structure(a.n_max, limit));
  }
  if (all || a.target == "oracle") report.append(check_oracle(a.n_max, limit));

  if (a.format == "json") {
    out << report_json(report) << '\n';
  } else {
    out << format_report(report);
  }
  if (!report.all_passed()) err << "verify: some checks failed\n";
  return report.all_passed() ? kOk : kContains;
}

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const int o = a.order;
  BivariateSeries s(0, 0);
  if (a.name == "K") s = K_series(o, o);
  else if (a.name == "A") s = A_series(o, o);
  else if (a.name == "L") s = L_series(o, o);
  else if (a.name == "binomial_egf") s = binomial_egf_series(o, o);
  else if (a.name == "bessel_i0") s = bessel_i0_series(o, o);
  else if (a.name == "exp_sum") s = exp_sum_series(o, o);
  else s = geometric_series(o, o);
  out << to_json(s) << '\n';
  return kOk;
}

}  // namespace

std::string format_report(const VerificationReport& report) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.id << std::string(width - c.id.size() + 2, ' ')
       << c.cells_checked << " cells  " << c.description << '\n';
    for (const auto& f : c.failures) os << "        " << f << '\n';
  }
  for (const auto& n : report.notes) os << "note: " << n << '\n';
  os << (report.all_passed() ? "all checks passed" : "FAILED") << '\n';
  return os.str();
}

std::string report_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"passed", c.passed},
                      {"cells_checked", c.cells_checked},
                      {"failures", c.failures}});
  }
  Json doc;
  doc["passed"] = report.all_passed();
  doc["checks"] = std::move(checks);
  doc["notes"] = report.notes;
  return doc.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split-pattern (3|12, 23|1) avoidance: counts, enumeration, identity checks",
               "splitperm"};
  app.require_subcommand(1, 1);

  int limit = kDefaultExhaustiveLimit;
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--unsafe-n-max", limit,
                    "Raise the exhaustive-search guard (default " +
                        std::to_string(kDefaultExhaustiveLimit) + ")")
        ->check(CLI::NonNegativeNumber);
  };

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print k(r,n) for 1 <= n <= n-max");
  table_cmd->add_option("--n-max", table.n_max, "Largest n")->required()->check(CLI::Range(1, 100));
  table_cmd->add_option("--r-max", table.r_max, "Only rows with r <= r-max")
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Print k(r,n)");
  count_cmd->add_option("--r", count.r)->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--n", count.n)->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--method", count.method)
      ->check(CLI::IsMember({"formula", "corollary", "brute"}));
  add_guard(count_cmd);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand(
      "check", "Test a permutation against 3|12 and 23|1 at position r (exit 1 if contained)");
  check_cmd->add_option("--perm", check.perm, "e.g. 315642 or 3,1,5,6,4,2")->required();
  check_cmd->add_option("--r", check.r)->required();

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List K(r,n) in lexicographic order");
  enumerate_cmd->add_option("--r", enumerate.r)->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--n", enumerate.n)->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--format", enumerate.format)
      ->check(CLI::IsMember({"lines", "csv", "json"}));
  add_guard(enumerate_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run exact identity and oracle checks");
  verify_cmd->add_option("--target", verify.target)
      ->check(CLI::IsMember({"main2", "bessel", "recursion", "symmetry", "fibers", "oracle", "all"}));
  verify_cmd->add_option("--order", verify.order, "Series window per variable")
      ->check(CLI::Range(2, 200));
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n for exhaustive checks")
      ->check(CLI::Range(1, 1000));
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));
  add_guard(verify_cmd);

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Dump a named series as exact JSON");
  series_cmd->add_option("--name", series.name)
      ->required()
      ->check(CLI::IsMember({"K", "A", "L", "binomial_egf", "bessel_i0", "exp_sum", "geometric"}));
  series_cmd->add_option("--order", series.order)->check(CLI::Range(0, 200));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  try {
    if (table_cmd->parsed()) return cmd_table(table, out);
    if (count_cmd->parsed()) return cmd_count(count, limit, out, err);
    if (check_cmd->parsed()) return cmd_check(check, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate, limit, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, limit, out, err);
    if (series_cmd->parsed()) return cmd_series(series, out);
  } catch (const GuardExceeded& e) {
    err << e.what() << '\n';
    return kGuardExceeded;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace splitperm::cli

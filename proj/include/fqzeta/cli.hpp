#ifndef FQZETA_CLI_HPP
#define FQZETA_CLI_HPP

// Command-line front end. run_cli takes the arguments after the program name
// and returns the process exit code:
//   0 success, 1 bad arguments or I/O failure, 2 methods disagree,
//   3 a verification failed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqzeta/error.hpp"
#include "fqzeta/finite_field.hpp"
#include "fqzeta/powersums.hpp"
#include "fqzeta/record.hpp"
#include "fqzeta/relations.hpp"

namespace fqzeta {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDisagree = 2, kExitVerifyFailed = 3 };

namespace cli_detail {

inline const std::vector<std::string>& method_choices() {
  static const std::vector<std::string> names{"initial", "recursion", "closed", "symmetric", "closed-q2", "all"};
  return names;
}

inline Method parse_method(const std::string& name) {
  for (Method m : {Method::Initial, Method::Recursion, Method::Closed, Method::Symmetric, Method::ClosedQ2})
    if (method_name(m) == name) return m;
  throw Error(Errc::InvalidArgument, "unknown method '" + name + "'");
}

inline std::string relation_line(const RelationSet& rs, std::string_view method) {
  return "S(" + std::to_string(rs.a) + "," + std::to_string(rs.b) + ") q=" + std::to_string(rs.q) + " [" +
         std::string(method) + "]: " + rs.to_string();
}

inline void check_positive(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(Errc::InvalidArgument, "a and b must be >= 1");
}

struct Options {
  std::int64_t q = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::string method = "initial";
  bool json = false;
  std::vector<int> depths{1, 2, 3};
  std::int64_t zeta_precision = 30;
  std::int64_t amax = 0;
  std::int64_t bmax = 0;
  std::string out_path;
  std::vector<int> table_depths;
  unsigned threads = 0;
  std::uint64_t max_enum = EnumerationBudget{}.max_monics;
};

inline int cmd_relation(const Options& o, std::ostream& out) {
  check_positive(o.a, o.b);
  const FieldPtr field = make_field_q(o.q);
  PowerSums ps(field, EnumerationBudget{o.max_enum});
  std::vector<std::pair<std::string, RelationSet>> results;
  if (o.method == "all") {
    for (Method m : applicable_methods(field->q()))
      results.emplace_back(std::string(method_name(m)), compute_relation(ps, o.a, o.b, m));
  } else {
    const Method m = parse_method(o.method);
    results.emplace_back(o.method, compute_relation(ps, o.a, o.b, m));
  }
  const bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) { return r.second == results.front().second; });
  if (o.json) {
    std::vector<RelationRecord> records;
    for (const auto& [name, rs] : results) records.push_back(to_record(rs, field->s(), name));
    auto doc = records_document(records);
    if (o.method == "all") doc["agree"] = agree;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, rs] : results) out << relation_line(rs, name) << "\n";
    if (o.method == "all") out << "agree: " << (agree ? "true" : "false") << "\n";
  }
  return agree ? kExitOk : kExitDisagree;
}

inline int cmd_gt(const Options& o, std::ostream& out) {
  if (o.a < 1) throw Error(Errc::InvalidArgument, "a must be >= 1");
  const FieldPtr field = make_field_q(o.q);
  out << g_poly(o.a, field).to_string() << "\n";
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  check_positive(o.a, o.b);
  if (o.zeta_precision < 0) throw Error(Errc::InvalidArgument, "--zeta-precision must be >= 0");
  for (int d : o.depths)
    if (d < 0) throw Error(Errc::InvalidArgument, "depths must be >= 0");
  const FieldPtr field = make_field_q(o.q);
  PowerSums ps(field, EnumerationBudget{o.max_enum});
  const RelationSet rs = solve_initial(ps, o.a, o.b);
  out << relation_line(rs, "initial") << "\n";
  bool ok = true;
  for (int d : o.depths) {
    const bool pass = verify_depth(ps, rs, d);
    ok = ok && pass;
    out << "depth " << d << ": " << (pass ? "pass" : "FAIL") << "\n";
  }
  if (o.zeta_precision > 0) {
    const bool pass = verify_zeta(ps, shuffle_identity(rs), o.zeta_precision);
    ok = ok && pass;
    out << "zeta through t^-" << o.zeta_precision << ": " << (pass ? "pass" : "FAIL") << "\n";
  }
  out << "result: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

inline int cmd_table(const Options& o, std::ostream& out) {
  if (o.amax < 1) throw Error(Errc::InvalidArgument, "--amax must be >= 1");
  const std::int64_t bmax = o.bmax > 0 ? o.bmax : o.amax;
  if (o.method == "all") throw Error(Errc::InvalidArgument, "table takes a single method");
  const Method method = parse_method(o.method);
  const FieldPtr field = make_field_q(o.q);
  if (method == Method::ClosedQ2 && field->q() != 2) throw Error(Errc::QNotTwo, "closed-q2 needs q = 2");

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 1; a <= o.amax; ++a)
    for (std::int64_t b = 1; b <= std::min(a, bmax); ++b) pairs.emplace_back(a, b);

  std::vector<RelationRecord> records(pairs.size());
  std::vector<char> verified(pairs.size(), 1);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    PowerSums ps(field, EnumerationBudget{o.max_enum});
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        const auto [a, b] = pairs[i];
        const RelationSet rs = compute_relation(ps, a, b, method);
        std::vector<int> depths;
        for (int d : o.table_depths) {
          if (verify_depth(ps, rs, d))
            depths.push_back(d);
          else
            verified[i] = 0;
        }
        records[i] = to_record(rs, field->s(), method_name(method), std::move(depths));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = pairs.size();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned nthreads = std::max(1u, std::min<unsigned>(o.threads ? o.threads : hw, static_cast<unsigned>(pairs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  const std::string text = records_document(records).dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open '" + o.out_path + "' for writing");
    file << text;
    file.close();
    if (!file) throw Error(Errc::InvalidArgument, "failed writing '" + o.out_path + "'");
    out << "wrote " << records.size() << " records to " << o.out_path << "\n";
  }
  const bool all_verified = std::all_of(verified.begin(), verified.end(), [](char v) { return v != 0; });
  return all_verified ? kExitOk : kExitVerifyFailed;
}

}  // namespace cli_detail

/// Runs the tool on `args` (program name excluded).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  Options o;
  CLI::App app{"Shuffle relations for multizeta values over F_q[t]", "fqzeta"};
  app.require_subcommand(1);
  app.add_option("--max-enum", o.max_enum, "Largest number of monic polynomials enumerated per degree")
      ->check(CLI::PositiveNumber);

  auto* rel = app.add_subcommand("relation", "Print the relation set S(a,b)");
  rel->add_option("q", o.q, "Field size, a prime power")->required();
  rel->add_option("a", o.a)->required();
  rel->add_option("b", o.b)->required();
  rel->add_option("--method", o.method)->check(CLI::IsMember(method_choices()));
  rel->add_flag("--json", o.json, "Emit JSON records");

  auto* gt = app.add_subcommand("gt", "Print the polynomial g_t for a");
  gt->add_option("q", o.q)->required();
  gt->add_option("a", o.a)->required();

  auto* ver = app.add_subcommand("verify", "Check S(a,b) at several depths and at the zeta level");
  ver->add_option("q", o.q)->required();
  ver->add_option("a", o.a)->required();
  ver->add_option("b", o.b)->required();
  ver->add_option("--depths", o.depths, "Comma-separated depths")->delimiter(',');
  ver->add_option("--zeta-precision", o.zeta_precision, "Check zeta(a)zeta(b) through t^-N; 0 skips");

  auto* tab = app.add_subcommand("table", "Write relation records for all b <= a <= amax, b <= bmax");
  tab->add_option("q", o.q)->required();
  tab->add_option("--amax", o.amax)->required();
  tab->add_option("--bmax", o.bmax, "Defaults to amax");
  tab->add_option("--out", o.out_path, "Output file; stdout if omitted");
  tab->add_option("--method", o.method)->check(CLI::IsMember(method_choices()));
  tab->add_option("--verify-depths", o.table_depths, "Depths to verify for every record")->delimiter(',');
  tab->add_option("--threads", o.threads, "Worker threads; 0 uses the hardware count");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rel) return cmd_relation(o, out);
    if (*gt) return cmd_gt(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*tab) return cmd_table(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fqzeta

#endif  // FQZETA_CLI_HPP

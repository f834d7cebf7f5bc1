#include "suregrover/cli.hpp"

#include "suregrover/dynamics.hpp"
#include "suregrover/identities.hpp"
#include "suregrover/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace suregrover::cli {

std::string format_significant(double value, int digits) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  if (value == 0.0) return "0";
  // Take the exponent after rounding, so 0.9999999999999 counts as 1.
  char probe[64];
  std::snprintf(probe, sizeof probe, "%.*e", std::max(digits - 1, 0), value);
  const int exponent = std::atoi(std::strchr(probe, 'e') + 1);
  const int decimals = std::clamp(digits - 1 - exponent, 0, 340);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::size_t CurveTable::root_columns() const {
  std::size_t cols = 1;
  for (const auto& row : rows) cols = std::max(cols, row.thetas.size());
  return cols;
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUREGROVER_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

CurveTable scan_curve(int member, int resolution, const SolverOptions& opts, unsigned workers) {
  require_supported_member(member);
  if (resolution < 2) throw InputError("resolution must be at least 2");
  CurveTable table;
  table.member = member;
  table.resolution = resolution;
  table.rows.resize(static_cast<std::size_t>(resolution));

  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < resolution; i = next++) {
      const double f = static_cast<double>(i + 1) / resolution;
      table.rows[i] = {f, solve(f, member, opts).thetas};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return table;
}

std::string curve_to_csv(const CurveTable& table) {
  const std::size_t cols = table.root_columns();
  std::ostringstream os;
  os << "f";
  for (std::size_t c = 1; c <= cols; ++c) os << ",theta" << c;
  os << '\n';
  for (const auto& row : table.rows) {
    os << format_significant(row.f);
    for (std::size_t c = 0; c < cols; ++c) {
      os << ',';
      if (c < row.thetas.size()) os << format_significant(row.thetas[c]);
    }
    os << '\n';
  }
  return os.str();
}

std::string range_to_json(const ValidityRange& range) {
  nlohmann::json j;
  j["member"] = range.member;
  j["f_min"] = range.f_min;
  j["f_max"] = range.f_max;
  j["bands"] = nlohmann::json::array();
  for (const auto& b : range.bands) {
    j["bands"].push_back({{"f_lo", b.f_lo}, {"f_hi", b.f_hi}, {"count", b.count}});
  }
  return j.dump(2) + "\n";
}

namespace {

constexpr double kRadToDeg = 180.0 / kPi;

std::string angle_text(double radians) {
  return format_significant(radians) + " rad (" + format_significant(radians * kRadToDeg) +
         " deg)";
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string range_text(const ValidityRange& range) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "[%.9f, %.9f]", range.f_min, range.f_max);
  return buf;
}

// Member validation shared by the subcommands; returns an exit code or -1.
int check_member(int member, std::ostream& err) {
  try {
    require_supported_member(member);
  } catch (const UnsupportedMember& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedMember;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return -1;
}

int cmd_solve(int member, double f, const SolverOptions& opts, std::ostream& out,
              std::ostream& err) {
  if (int code = check_member(member, err); code >= 0) return code;
  if (!(f > 0.0 && f <= 1.0)) {
    err << "error: --f must lie in (0, 1]\n";
    return kUsage;
  }
  const SolutionSet set = solve(f, member, opts);
  out << "member " << member << ", f = " << format_significant(f) << ": " << set.count()
      << (set.count() == 1 ? " solution" : " solutions") << '\n';
  if (set.count() == 0) {
    out << "no solution; valid range " << range_text(validity_range(member, opts)) << '\n';
    return kOk;
  }
  for (int k = 0; k < set.count(); ++k) {
    const RunReport report = run_reduced(f, member, set.params(k));
    out << "  theta" << (k + 1) << " = " << angle_text(set.thetas[k])
        << "  phi = " << angle_text(set.phis[k]) << "  residual = " << sci(set.residual_norms[k])
        << '\n';
    out << "    verify (reduced): success probability = "
        << format_significant(report.success_probability)
        << ", unmarked probability = " << sci(report.unmarked_probability) << '\n';
  }
  return kOk;
}

int cmd_scan(int member, int resolution, const std::string& output, std::string sidecar,
             const SolverOptions& opts, std::ostream& out, std::ostream& err) {
  if (int code = check_member(member, err); code >= 0) return code;
  if (resolution < 2) {
    err << "error: --resolution must be at least 2\n";
    return kUsage;
  }
  if (sidecar.empty()) sidecar = std::filesystem::path(output).replace_extension(".json").string();

  const CurveTable table = scan_curve(member, resolution, opts, worker_count());
  const ValidityRange range = validity_range(member, opts);

  std::ofstream csv(output, std::ios::binary);
  if (!csv) {
    err << "error: cannot write " << output << '\n';
    return kIoError;
  }
  csv << curve_to_csv(table);
  std::ofstream json(sidecar, std::ios::binary);
  if (!json) {
    err << "error: cannot write " << sidecar << '\n';
    return kIoError;
  }
  json << range_to_json(range);
  csv.close();
  json.close();
  if (!csv || !json) {
    err << "error: write failed\n";
    return kIoError;
  }
  out << "wrote " << table.rows.size() << " rows to " << output << "; valid range "
      << range_text(range) << " written to " << sidecar << '\n';
  return kOk;
}

int cmd_verify(int member, long long n_total, long long marked_count, std::uint64_t seed,
               std::size_t shots, const SolverOptions& opts, std::ostream& out,
               std::ostream& err) {
  if (int code = check_member(member, err); code >= 0) return code;
  if (n_total < 1 || static_cast<unsigned long long>(n_total) > kMaxFullDimension) {
    err << "error: --n-total must lie in [1, 2^22]\n";
    return kUsage;
  }
  if (marked_count < 1 || marked_count > n_total) {
    err << "error: --marked-count must lie in [1, N]\n";
    return kUsage;
  }
  const ProblemInstance instance = ProblemInstance::random(
      static_cast<std::size_t>(n_total), static_cast<std::size_t>(marked_count), seed);
  const double f = instance.fraction();
  const SolutionSet set = solve(f, member, opts);
  out << "instance: N = " << n_total << ", marked = " << marked_count
      << " (f = " << format_significant(f) << "), seed = " << seed << '\n';
  if (set.count() == 0) {
    out << "f is outside the validity range of member " << member << ": "
        << range_text(validity_range(member, opts)) << '\n';
    return kOutOfRange;
  }

  bool all_ok = true;
  for (int k = 0; k < set.count(); ++k) {
    const RunReport report = run_full(instance, member, set.params(k));
    const bool ok = std::abs(report.success_probability - 1.0) <= 1e-10;
    all_ok = all_ok && ok;
    out << "root " << (k + 1) << ": theta = " << angle_text(report.params.theta())
        << ", phi = " << angle_text(report.params.phi()) << '\n'
        << "  backend                = " << backend_name(report.backend) << '\n'
        << "  queries                = " << report.queries << '\n'
        << "  success probability    = " << format_significant(report.success_probability) << '\n'
        << "  max unmarked prob.     = " << sci(report.max_unmarked_probability) << '\n'
        << "  per-marked probability = " << format_significant(report.per_marked_probability)
        << " (x fN = " << format_significant(report.per_marked_relative) << ")\n"
        << "  result                 = " << (ok ? "SURE SUCCESS" : "FAILED") << '\n';
    if (shots > 0) {
      const FullRun run = simulate_full(instance, member, set.params(k));
      std::size_t marked_hits = 0;
      for (const auto& [index, hits] : sample_measurements(run.state, shots, seed + k)) {
        if (instance.is_marked(index)) marked_hits += hits;
      }
      out << "  sampled                = " << marked_hits << " / " << shots
          << " shots landed on a marked element\n";
    }
  }
  return all_ok ? kOk : kCheckFailed;
}

int cmd_check_identities(const std::vector<int>& members, bool inject_flip, std::ostream& out,
                         std::ostream& err) {
  IdentityOptions opts;
  if (!members.empty()) opts.members = members;
  for (int m : opts.members) {
    if (int code = check_member(m, err); code >= 0) return code;
  }
  opts.inject_b1_sign_flip = inject_flip;
  int failures = 0;
  for (const IdentityCheck& c : run_identity_checks(opts)) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failures;
  }
  out << (failures == 0 ? "all identity checks passed" : std::to_string(failures) + " check(s) failed")
      << '\n';
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sure-success phased Grover search: phase solver and verifier", "suregrover"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file overriding solver tunables");

  SolverOptions opts;
  app.add_option("--grid-points", opts.grid_points, "root-isolation grid size over cos^2(theta)")
      ->capture_default_str();
  app.add_option("--fallback-grid-points", opts.fallback_grid_points,
                 "grid size used when a scan sees a dip in the root count")
      ->capture_default_str();
  app.add_option("--bisection-tol", opts.bisection_tol)->capture_default_str();
  app.add_option("--residual-tol", opts.residual_tol)->capture_default_str();
  app.add_option("--scan-samples", opts.scan_samples, "f samples per range scan (0 = auto)")
      ->capture_default_str();
  app.add_option("--boundary-tol", opts.boundary_tol)->capture_default_str();

  int member = 0;
  double f = 0.0;
  auto* solve_cmd = app.add_subcommand("solve", "find every sure-success (theta, phi) at one f");
  solve_cmd->add_option("--member", member, "algorithm member n")->required();
  solve_cmd->add_option("--f", f, "marked fraction")->required();

  int resolution = 0;
  std::string output = "theta_curve.csv";
  std::string sidecar;
  auto* scan_cmd = app.add_subcommand("scan", "tabulate theta versus f as CSV plus a JSON range");
  scan_cmd->add_option("--member", member)->required();
  scan_cmd->add_option("--resolution", resolution, "number of f samples")->required();
  scan_cmd->add_option("--output,-o", output, "CSV path")->capture_default_str();
  scan_cmd->add_option("--sidecar", sidecar, "JSON path (default: CSV path with .json)");

  long long n_total = 0;
  long long marked_count = 0;
  std::uint64_t seed = 1;
  std::size_t shots = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the full simulator on a random instance");
  verify_cmd->add_option("--member", member)->required();
  verify_cmd->add_option("--n-total", n_total, "database size N")->required();
  verify_cmd->add_option("--marked-count", marked_count, "number of marked elements")->required();
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--shots", shots, "also sample this many measurements")
      ->capture_default_str();

  std::vector<int> members;
  bool inject_flip = false;
  auto* check_cmd = app.add_subcommand("check-identities", "run the algebraic self-checks");
  check_cmd->add_option("--members", members, "even members for the polynomial checks")
      ->delimiter(',');
  check_cmd->add_flag("--inject-b1-sign-flip", inject_flip)->group("");

  std::vector<const char*> argv{"suregrover"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(member, f, opts, out, err);
    if (scan_cmd->parsed()) return cmd_scan(member, resolution, output, sidecar, opts, out, err);
    if (verify_cmd->parsed()) {
      return cmd_verify(member, n_total, marked_count, seed, shots, opts, out, err);
    }
    if (check_cmd->parsed()) return cmd_check_identities(members, inject_flip, out, err);
  } catch (const UnsupportedMember& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedMember;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace suregrover::cli

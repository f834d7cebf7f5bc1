#pragma once

#include "suregrover/solver.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace suregrover::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kUnsupportedMember = 3,
  kIoError = 4,
  kOutOfRange = 5,
};

/// Fixed-notation rendering with `digits` significant digits ('.' decimal,
/// never an exponent).
std::string format_significant(double value, int digits = 12);

/// theta-versus-f samples for one member; absent roots are missing entries.
struct CurveTable {
  int member = 0;
  int resolution = 0;
  struct Row {
    double f = 0.0;
    std::vector<double> thetas;  // ascending
  };
  std::vector<Row> rows;  // ascending f

  std::size_t root_columns() const;
};

/// Worker count from SUREGROVER_THREADS, else the hardware concurrency.
unsigned worker_count();

/// Samples f = i / resolution for i = 1..resolution and solves each sample.
/// Rows are written by index, so the table does not depend on scheduling.
CurveTable scan_curve(int member, int resolution, const SolverOptions& opts,
                      unsigned workers);

/// CSV with header "f,theta1,theta2,..." and empty cells for absent roots.
std::string curve_to_csv(const CurveTable& table);

/// {"member", "f_min", "f_max", "bands": [{"f_lo", "f_hi", "count"}]}
std::string range_to_json(const ValidityRange& range);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suregrover::cli

#include "suregrover/solver.hpp"

#include "suregrover/condition_poly.hpp"
#include "suregrover/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace suregrover {
namespace {

constexpr double kMinRootSeparation = 1e-8;

void require_fraction(double f) {
  if (!(f > 0.0 && f <= 1.0)) {
    throw InputError("fraction f must lie in (0, 1], got " + std::to_string(f));
  }
}

void add_root(SolutionSet& set, double theta, double phi, const SolverOptions& opts) {
  const double residual = std::abs(sure_success_residual(set.f, {theta, phi}, set.member));
  if (residual < opts.residual_tol) {
    set.thetas.push_back(theta);
    set.phis.push_back(phi);
    set.residual_norms.push_back(residual);
  } else {
    ++set.rejected;
  }
}

// Sorts by theta and drops roots closer than kMinRootSeparation, keeping the
// one with the smaller residual.
void finalize(SolutionSet& set) {
  std::vector<std::size_t> order(set.thetas.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return set.thetas[a] < set.thetas[b]; });
  SolutionSet out = set;
  out.thetas.clear();
  out.phis.clear();
  out.residual_norms.clear();
  for (std::size_t idx : order) {
    if (!out.thetas.empty() && set.thetas[idx] - out.thetas.back() <= kMinRootSeparation) {
      if (set.residual_norms[idx] < out.residual_norms.back()) {
        out.thetas.back() = set.thetas[idx];
        out.phis.back() = set.phis[idx];
        out.residual_norms.back() = set.residual_norms[idx];
      }
      continue;
    }
    out.thetas.push_back(set.thetas[idx]);
    out.phis.push_back(set.phis[idx]);
    out.residual_norms.push_back(set.residual_norms[idx]);
  }
  if (out.thetas.empty() && !out.out_of_range) out.out_of_range = true;
  set = std::move(out);
}

// Bisects a sign change of p on [lo, hi] until the bracket is below tol/1000
// or can no longer shrink in double precision.
double bisect_root(const std::vector<double>& p, double lo, double hi, double tol) {
  const bool lo_negative = std::signbit(horner(p, lo));
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double pm = horner(p, mid);
    if (pm == 0.0) return mid;
    if (std::signbit(pm) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < tol * 1e-3) break;
  }
  return std::abs(horner(p, lo)) <= std::abs(horner(p, hi)) ? lo : hi;
}

}  // namespace

SolutionSet solve_member1(double f) {
  require_fraction(f);
  SolutionSet set;
  set.f = f;
  set.member = 1;
  if (f < 0.25) {
    set.out_of_range = true;
    set.note = "member 1 requires 1/4 <= f <= 1";
    return set;
  }
  const double arg = std::clamp(1.0 / (2.0 * f) - 1.0, -1.0, 1.0);
  const double theta = 0.5 * std::acos(arg);
  // + 0.0 keeps phi at +0 when theta is zero.
  add_root(set, theta, -2.0 * theta + 0.0, SolverOptions{});
  finalize(set);
  return set;
}

SolutionSet solve_member2_closed(double f) {
  require_fraction(f);
  SolutionSet set;
  set.f = f;
  set.member = 2;
  if (f == 1.0) {
    set.out_of_range = true;
    set.note = "closed form divides by 1 - f; undefined at f = 1";
    return set;
  }
  const double arg = (std::sqrt(4.0 / f - 3.0) + (4.0 * f - 3.0)) / (4.0 * (1.0 - f));
  if (!(arg >= -1.0 && arg <= 1.0)) {
    set.out_of_range = true;
    set.note = "arccos argument outside [-1, 1]";
    return set;
  }
  const double theta = 0.5 * std::acos(arg);
  add_root(set, theta, 2.0 * theta, SolverOptions{});
  finalize(set);
  return set;
}

SolutionSet solve_even(double f, int member, const SolverOptions& opts) {
  require_supported_member(member);
  if (member % 2 != 0) {
    throw std::invalid_argument("solve_even needs an even member, got " + std::to_string(member));
  }
  require_fraction(f);
  SolutionSet set;
  set.f = f;
  set.member = member;
  if (f == 1.0) {
    set.out_of_range = true;
    set.note = "f = 1 leaves no unmarked element; the condition is not defined there";
    return set;
  }

  const std::vector<double> p = condition_polynomial(member).at_fraction(f);
  const int grid = std::max(opts.grid_points, 2);
  std::vector<double> values(grid + 1);
  for (int j = 1; j <= grid; ++j) values[j] = horner(p, static_cast<double>(j) / grid);

  for (int j = 1; j <= grid; ++j) {
    const double xj = static_cast<double>(j) / grid;
    double x = -1.0;
    if (values[j] == 0.0) {
      x = xj;
    } else if (j < grid && values[j + 1] != 0.0 &&
               std::signbit(values[j]) != std::signbit(values[j + 1])) {
      x = bisect_root(p, xj, static_cast<double>(j + 1) / grid, opts.bisection_tol);
    } else {
      continue;
    }
    const double theta = std::acos(std::sqrt(x));
    add_root(set, theta, 2.0 * theta, opts);
  }
  finalize(set);
  return set;
}

SolutionSet solve(double f, int member, const SolverOptions& opts) {
  require_supported_member(member);
  if (member == 1) return solve_member1(f);
  return solve_even(f, member, opts);
}

const MultiplicityBand* ValidityRange::band(int count) const {
  const MultiplicityBand* best = nullptr;
  for (const auto& b : bands) {
    if (b.count != count) continue;
    if (best == nullptr || b.f_hi - b.f_lo > best->f_hi - best->f_lo) best = &b;
  }
  return best;
}

namespace {

class RangeScanner {
 public:
  RangeScanner(int member, const SolverOptions& opts) : member_(member), opts_(opts) {}

  int count(double f) const { return solve(f, member_, opts_).count(); }

  int count_fine(double f) const {
    SolverOptions fine = opts_;
    fine.grid_points = opts_.fallback_grid_points;
    return solve(f, member_, fine).count();
  }

  // Finds every change of the root count inside (lo, hi).
  void locate(double lo, int c_lo, double hi, int c_hi,
              std::vector<RootCountTransition>& out) const {
    if (hi - lo <= opts_.boundary_tol) {
      out.push_back({0.5 * (lo + hi), c_lo, c_hi});
      return;
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      out.push_back({mid, c_lo, c_hi});
      return;
    }
    const int c_mid = count(mid);
    if (c_mid != c_lo) locate(lo, c_lo, mid, c_mid, out);
    if (c_mid != c_hi) locate(mid, c_mid, hi, c_hi, out);
  }

 private:
  int member_;
  SolverOptions opts_;
};

}  // namespace

ValidityRange validity_range(int member, const SolverOptions& opts) {
  require_supported_member(member);
  const RangeScanner scanner(member, opts);

  // Sample f = sin^2(u) with u uniform in (0, pi/2): denser near both ends,
  // where the boundaries of high members crowd together.
  const int samples = opts.scan_samples > 0 ? opts.scan_samples : std::max(1024, 64 * member);
  std::vector<double> fs;
  for (int i = 1; i < samples; ++i) {
    const double s = std::sin(0.5 * kPi * static_cast<double>(i) / samples);
    fs.push_back(s * s);
  }
  if (member == 1) fs.push_back(1.0);

  std::vector<int> counts(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) counts[i] = scanner.count(fs[i]);
  // A count below both neighbours suggests a near-tangent pair slipped
  // through the coarse grid.
  for (std::size_t i = 1; i + 1 < fs.size(); ++i) {
    if (counts[i] < counts[i - 1] && counts[i] < counts[i + 1]) counts[i] = scanner.count_fine(fs[i]);
  }

  ValidityRange range;
  range.member = member;
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    if (counts[i] != counts[i + 1]) {
      scanner.locate(fs[i], counts[i], fs[i + 1], counts[i + 1], range.transitions);
    }
  }

  const int max_count = *std::max_element(counts.begin(), counts.end());
  for (int k = 1; k <= max_count; ++k) {
    bool open = counts.front() >= k;
    double start = fs.front();
    for (const auto& t : range.transitions) {
      if (!open && t.count_below < k && t.count_above >= k) {
        open = true;
        start = t.f;
      } else if (open && t.count_below >= k && t.count_above < k) {
        open = false;
        range.bands.push_back({start, t.f, k});
      }
    }
    if (open) range.bands.push_back({start, fs.back(), k});
  }

  bool any = false;
  for (const auto& b : range.bands) {
    if (b.count != 1) continue;
    range.f_min = any ? std::min(range.f_min, b.f_lo) : b.f_lo;
    range.f_max = any ? std::max(range.f_max, b.f_hi) : b.f_hi;
    any = true;
  }
  return range;
}

}  // namespace suregrover

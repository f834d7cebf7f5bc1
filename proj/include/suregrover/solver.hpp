#pragma once

#include "suregrover/types.hpp"

#include <string>
#include <vector>

namespace suregrover {

/// Tunables for root isolation and range scans. Defaults are the values the
/// acceptance suite is pinned against.
struct SolverOptions {
  int grid_points = 4096;            // sign-change grid over x = cos^2(theta) in (0, 1]
  int fallback_grid_points = 65536;  // used when a scan finds a dip in the root count
  double bisection_tol = 1e-13;      // bisect at least this far in x (continues to ulp)
  double residual_tol = 1e-10;       // every emitted root is re-verified at this level
  int scan_samples = 0;              // f samples per range scan; 0 picks a default
  double boundary_tol = 1e-9;        // bisection tolerance on range boundaries in f
};

/// All sure-success phase pairs found for one member at one fraction.
/// theta >= 0 branch only; the mirror (-theta, -phi) is also a solution.
struct SolutionSet {
  double f = 0.0;
  int member = 0;
  std::vector<double> thetas;          // ascending
  std::vector<double> phis;            // phi = 2 theta (even) or -2 theta (member 1)
  std::vector<double> residual_norms;  // |A_n - B_n| per root
  int rejected = 0;                    // grid roots that failed re-verification
  bool out_of_range = false;
  std::string note;

  int count() const { return static_cast<int>(thetas.size()); }
  PhaseParams params(int i) const { return {thetas.at(i), phis.at(i)}; }
};

/// Member 1: theta = acos(1/(2f) - 1) / 2, phi = -2 theta, for 1/4 <= f <= 1.
SolutionSet solve_member1(double f);

/// Member 2 via the closed form of the quadratic condition in cos^2(theta).
SolutionSet solve_member2_closed(double f);

/// Even members: grid sign-change scan of the condition polynomial over
/// x in (0, 1], bisection, then theta = acos(sqrt(x)).
SolutionSet solve_even(double f, int member, const SolverOptions& opts = {});

/// Dispatch: member 1 closed form, even members via solve_even.
SolutionSet solve(double f, int member, const SolverOptions& opts = {});

struct MultiplicityBand {
  double f_lo = 0.0;
  double f_hi = 0.0;
  int count = 0;  // at least this many roots on [f_lo, f_hi]
};

struct RootCountTransition {
  double f = 0.0;
  int count_below = 0;
  int count_above = 0;
};

struct ValidityRange {
  int member = 0;
  double f_min = 0.0;
  double f_max = 0.0;
  std::vector<MultiplicityBand> bands;  // ordered by count, then f_lo
  std::vector<RootCountTransition> transitions;

  /// Outermost band with at least `count` roots, or nullptr.
  const MultiplicityBand* band(int count) const;
};

/// Scans the root count over f and bisects every change to opts.boundary_tol.
ValidityRange validity_range(int member, const SolverOptions& opts = {});

}  // namespace suregrover

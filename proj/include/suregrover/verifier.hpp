#pragma once

#include "suregrover/dynamics.hpp"
#include "suregrover/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace suregrover {

enum class Backend { kFull, kReduced };

const char* backend_name(Backend backend);

/// One operator application in an algorithm member.
struct Step {
  enum class Kind { kOracle, kDiffusion };
  Kind kind;
  bool adjoint;
};

/// Operator sequence of member m, in application order. Lambda contributes
/// F, O, F^dagger, O^dagger; member 1 is F, O.
std::vector<Step> algorithm_steps(int member);

inline constexpr std::size_t kMaxFullDimension = std::size_t{1} << 22;

struct RunReport {
  std::optional<ProblemInstance> instance;  // absent for the reduced backend
  double f = 0.0;
  int member = 0;
  PhaseParams params;
  Backend backend = Backend::kFull;
  int queries = 0;  // oracle applications, adjoints included

  double success_probability = 0.0;    // total probability on the marked set
  double unmarked_probability = 0.0;   // total probability off the marked set
  // Full backend: max_i |C_i|^2 over unmarked i. Reduced backend: N is
  // symbolic, so this holds the total unmarked probability, which bounds
  // every single unmarked element for any N.
  double max_unmarked_probability = 0.0;
  // Full backend: mean |C_i|^2 over marked i. Reduced backend: NaN.
  double per_marked_probability = 0.0;
  // Per-marked probability in units of 1/(fN); 1 at sure success.
  double per_marked_relative = 0.0;
  // Full backend: max - min of marked probabilities. Reduced: 0 by construction.
  double marked_spread = 0.0;

  bool sure_success(double tol = 1e-10) const {
    return std::abs(success_probability - 1.0) <= tol && max_unmarked_probability <= tol;
  }
};

struct FullRun {
  StateVector state;
  int queries = 0;
};

/// Applies the operator sequence of the member to the uniform state.
FullRun simulate_full(const ProblemInstance& instance, int member, const PhaseParams& params);

RunReport run_full(const ProblemInstance& instance, int member, const PhaseParams& params);

RunReport run_reduced(double f, int member, const PhaseParams& params);

/// Maximum |full_i - reduced_i| over all amplitudes. N must be <= 4096.
double cross_validate(const ProblemInstance& instance, int member, const PhaseParams& params);

/// Seeded measurement sampling for demonstration; exact probabilities are
/// what the reports use. Returns outcome index -> hit count.
std::map<std::size_t, std::size_t> sample_measurements(const StateVector& state,
                                                       std::size_t shots, std::uint64_t seed);

}  // namespace suregrover

#include "suregrover/verifier.hpp"

#include "suregrover/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace suregrover {

const char* backend_name(Backend backend) {
  return backend == Backend::kFull ? "full" : "reduced";
}

std::vector<Step> algorithm_steps(int member) {
  require_supported_member(member);
  using K = Step::Kind;
  if (member == 1) return {{K::kOracle, false}, {K::kDiffusion, false}};
  std::vector<Step> steps;
  for (int i = 0; i < member / 2; ++i) {
    steps.push_back({K::kOracle, false});
    steps.push_back({K::kDiffusion, false});
    steps.push_back({K::kOracle, true});
    steps.push_back({K::kDiffusion, true});
  }
  return steps;
}

FullRun simulate_full(const ProblemInstance& instance, int member, const PhaseParams& params) {
  const std::vector<Step> steps = algorithm_steps(member);
  if (instance.n_total() > kMaxFullDimension) {
    throw InputError("full backend supports N <= 2^22");
  }
  FullRun run{uniform_state(instance), 0};
  for (const Step& step : steps) {
    if (step.kind == Step::Kind::kOracle) {
      apply_oracle_inplace(run.state, instance, params.phi(), step.adjoint);
      ++run.queries;
    } else {
      apply_diffusion_inplace(run.state, params.theta(), step.adjoint);
    }
  }
  return run;
}

RunReport run_full(const ProblemInstance& instance, int member, const PhaseParams& params) {
  const FullRun run = simulate_full(instance, member, params);

  RunReport report;
  report.instance = instance;
  report.f = instance.fraction();
  report.member = member;
  report.params = params;
  report.backend = Backend::kFull;
  report.queries = run.queries;

  double marked_total = 0.0;
  double marked_min = std::numeric_limits<double>::infinity();
  double marked_max = 0.0;
  for (std::size_t idx : instance.marked()) {
    const double p = std::norm(run.state[idx]);
    marked_total += p;
    marked_min = std::min(marked_min, p);
    marked_max = std::max(marked_max, p);
  }
  double unmarked_total = 0.0;
  double unmarked_max = 0.0;
  const auto marked = instance.marked();
  std::size_t next = 0;
  for (std::size_t i = 0; i < run.state.size(); ++i) {
    if (next < marked.size() && marked[next] == i) {
      ++next;
      continue;
    }
    const double p = std::norm(run.state[i]);
    unmarked_total += p;
    unmarked_max = std::max(unmarked_max, p);
  }

  const double n_marked = static_cast<double>(instance.marked_count());
  report.success_probability = marked_total;
  report.unmarked_probability = unmarked_total;
  report.max_unmarked_probability = unmarked_max;
  report.per_marked_probability = marked_total / n_marked;
  report.per_marked_relative = report.per_marked_probability * n_marked;
  report.marked_spread = marked_max - marked_min;
  return report;
}

RunReport run_reduced(double f, int member, const PhaseParams& params) {
  if (!(f > 0.0 && f <= 1.0)) throw InputError("fraction f must lie in (0, 1]");
  const ReducedState state = reduced_run(f, params, member);

  RunReport report;
  report.f = f;
  report.member = member;
  report.params = params;
  report.backend = Backend::kReduced;
  const std::vector<Step> steps = algorithm_steps(member);
  report.queries = static_cast<int>(std::count_if(
      steps.begin(), steps.end(), [](const Step& s) { return s.kind == Step::Kind::kOracle; }));
  report.success_probability = state.success_probability(f);
  report.unmarked_probability = state.unmarked_probability(f);
  report.max_unmarked_probability = report.unmarked_probability;
  report.per_marked_probability = std::numeric_limits<double>::quiet_NaN();
  report.per_marked_relative = f * std::norm(state.marked);
  report.marked_spread = 0.0;
  return report;
}

double cross_validate(const ProblemInstance& instance, int member, const PhaseParams& params) {
  if (instance.n_total() > 4096) throw InputError("cross_validate supports N <= 4096");
  const FullRun full = simulate_full(instance, member, params);
  const ReducedState reduced = reduced_run(instance.fraction(), params, member);
  const double scale = 1.0 / std::sqrt(static_cast<double>(instance.n_total()));
  const Complex marked = reduced.marked * scale;
  const Complex unmarked = reduced.unmarked * scale;

  double gap = 0.0;
  for (std::size_t i = 0; i < full.state.size(); ++i) {
    const Complex expected = instance.is_marked(i) ? marked : unmarked;
    gap = std::max(gap, std::abs(full.state[i] - expected));
  }
  return gap;
}

std::map<std::size_t, std::size_t> sample_measurements(const StateVector& state,
                                                       std::size_t shots, std::uint64_t seed) {
  std::vector<double> cumulative(state.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    acc += std::norm(state[i]);
    cumulative[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::map<std::size_t, std::size_t> hits;
  for (std::size_t s = 0; s < shots; ++s) {
    // 53 random mantissa bits, independent of the library's distributions.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++hits[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return hits;
}

}  // namespace suregrover

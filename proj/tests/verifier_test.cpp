#include "suregrover/solver.hpp"
#include "suregrover/verifier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace suregrover {
namespace {

TEST(RunFull, GroverQuarterIsExact) {
  const ProblemInstance inst(8, {3, 5});
  const RunReport r = run_full(inst, 1, {0.0, 0.0});
  EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
  EXPECT_LT(r.max_unmarked_probability, 1e-12);
  EXPECT_EQ(r.queries, 1);
  EXPECT_EQ(r.backend, Backend::kFull);
  EXPECT_STREQ(backend_name(r.backend), "full");
}

TEST(RunFull, HalfMarkedMemberOne) {
  const ProblemInstance inst = ProblemInstance::random(12, 6, 3);
  const RunReport r = run_full(inst, 1, {kPi / 4, -kPi / 2});
  EXPECT_NEAR(r.per_marked_probability, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.per_marked_relative, 1.0, 1e-12);
  EXPECT_LT(r.marked_spread, 1e-15);
  EXPECT_TRUE(r.sure_success());
}

TEST(RunFull, EveryMemberFourRootAtFifth) {
  const ProblemInstance inst = ProblemInstance::random(1000, 200, 9);
  const SolutionSet s = solve_even(0.2, 4);
  ASSERT_GE(s.count(), 1);
  for (int k = 0; k < s.count(); ++k) {
    const RunReport r = run_full(inst, 4, s.params(k));
    EXPECT_NEAR(r.success_probability, 1.0, 1e-10);
    EXPECT_LT(r.max_unmarked_probability, 1e-10);
    EXPECT_NEAR(r.per_marked_relative, 1.0, 1e-10);
    EXPECT_EQ(r.queries, 4);
  }
}

TEST(RunFull, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 500;
    const ProblemInstance inst = ProblemInstance::random(n, 1 + rng() % (n - 1), rng());
    const RunReport r = run_full(inst, i % 3 == 0 ? 1 : 2 * (i % 3), {angle(rng), angle(rng)});
    ASSERT_NEAR(r.success_probability + r.unmarked_probability, 1.0, 1e-12);
  }
}

TEST(RunFull, RejectsUnsupported) {
  const ProblemInstance inst(8, {1});
  EXPECT_THROW(run_full(inst, 3, {0.1, 0.1}), UnsupportedMember);
  EXPECT_THROW(run_full(inst, -2, {0.1, 0.1}), std::invalid_argument);
}

TEST(RunReduced, MemberTwoRootHasNoUnmarkedWeight) {
  const SolutionSet s = solve_even(0.3, 2);
  ASSERT_EQ(s.count(), 1);
  const RunReport r = run_reduced(0.3, 2, s.params(0));
  EXPECT_LT(r.max_unmarked_probability, 1e-12);
  EXPECT_EQ(r.backend, Backend::kReduced);
  EXPECT_FALSE(r.instance.has_value());
  EXPECT_TRUE(std::isnan(r.per_marked_probability));
}

TEST(RunReduced, AllMarkedMemberOne) {
  const SolutionSet s = solve_member1(1.0);
  const RunReport r = run_reduced(1.0, 1, s.params(0));
  EXPECT_NEAR(r.success_probability, 1.0, 1e-15);
}

TEST(RunReduced, MemberSixAtHalfEveryRoot) {
  // f = 0.5 lies inside member 6's third-root band, so all three roots appear.
  const SolutionSet s = solve_even(0.5, 6);
  ASSERT_EQ(s.count(), 3);
  for (int k = 0; k < s.count(); ++k) {
    EXPECT_NEAR(run_reduced(0.5, 6, s.params(k)).success_probability, 1.0, 1e-10);
  }
}

TEST(CrossValidate, Examples) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 5; ++i) {
    const std::size_t n = 2 + rng() % 2000;
    const ProblemInstance inst = ProblemInstance::random(n, 1 + rng() % (n - 1), rng());
    EXPECT_LT(cross_validate(inst, 2, {0.0, 0.0}), 1e-12);
    EXPECT_LT(cross_validate(ProblemInstance::leading(n, n), 2, {0.7, 1.4}), 1e-12);
  }
  EXPECT_THROW(cross_validate(ProblemInstance::leading(4097, 1), 2, {0.1, 0.2}), InputError);
}

TEST(QueryAccounting, OracleApplicationsEqualMember) {
  for (int member : {1, 2, 4, 6, 8, 10}) {
    const std::vector<Step> steps = algorithm_steps(member);
    int oracles = 0;
    for (const Step& s : steps) oracles += s.kind == Step::Kind::kOracle;
    EXPECT_EQ(oracles, member);
    EXPECT_EQ(simulate_full(ProblemInstance(9, {2}), member, {0.3, 0.6}).queries, member);
  }
}

TEST(QueryAccounting, LambdaOrder) {
  const std::vector<Step> steps = algorithm_steps(2);
  ASSERT_EQ(steps.size(), 4u);
  EXPECT_EQ(steps[0].kind, Step::Kind::kOracle);
  EXPECT_FALSE(steps[0].adjoint);
  EXPECT_EQ(steps[1].kind, Step::Kind::kDiffusion);
  EXPECT_FALSE(steps[1].adjoint);
  EXPECT_EQ(steps[2].kind, Step::Kind::kOracle);
  EXPECT_TRUE(steps[2].adjoint);
  EXPECT_EQ(steps[3].kind, Step::Kind::kDiffusion);
  EXPECT_TRUE(steps[3].adjoint);
}

TEST(NegativeControl, PerturbedRootLeavesUnmarkedWeight) {
  // f = 0.3 roots sit well inside the range, far from the theta -> 0 edge.
  const ProblemInstance inst = ProblemInstance::random(1000, 300, 5);
  for (int member : {1, 2, 4}) {
    const SolutionSet s = solve(0.3, member);
    for (int k = 0; k < s.count(); ++k) {
      for (double d : {-1e-3, 1e-3}) {
        const RunReport r = run_full(inst, member, {s.thetas[k] + d, s.phis[k]});
        EXPECT_GT(r.unmarked_probability, 1e-8) << member;
        EXPECT_FALSE(r.sure_success());
      }
    }
  }
}

TEST(GroverComparison, OnlyQuarterAndAllMarkedAreExact) {
  EXPECT_TRUE(run_full(ProblemInstance::leading(16, 4), 1, {0.0, 0.0}).sure_success());
  EXPECT_TRUE(run_full(ProblemInstance::leading(16, 16), 1, {0.0, 0.0}).sure_success());
  for (std::size_t m : {1, 2, 3, 5, 8, 12, 15}) {
    EXPECT_FALSE(run_full(ProblemInstance::leading(16, m), 1, {0.0, 0.0}).sure_success()) << m;
  }
}

TEST(Sampling, SeededAndConcentratedOnMarked) {
  const ProblemInstance inst(8, {3, 5});
  const FullRun run = simulate_full(inst, 1, {0.0, 0.0});
  const auto a = sample_measurements(run.state, 5000, 7);
  const auto b = sample_measurements(run.state, 5000, 7);
  EXPECT_EQ(a, b);
  std::size_t total = 0;
  for (const auto& [idx, hits] : a) {
    EXPECT_TRUE(inst.is_marked(idx));
    total += hits;
  }
  EXPECT_EQ(total, 5000u);
  EXPECT_NEAR(static_cast<double>(a.at(3)) / 5000.0, 0.5, 0.05);
}

}  // namespace
}  // namespace suregrover

#include "suregrover/dynamics.hpp"

#include <cmath>
#include <string>

namespace suregrover {

void require_supported_member(int member) {
  if (member < 1) {
    throw std::invalid_argument("algorithm member must be >= 1, got " +
                                std::to_string(member));
  }
  if (member > 1 && member % 2 == 1) {
    throw UnsupportedMember(
        "odd member " + std::to_string(member) +
        " is not implemented: odd members above 1 are deferred (not analyzed)");
  }
}

ReducedCoeffs first_step_coeffs(double f, const PhaseParams& params) {
  const double theta = params.theta();
  const Complex oracle_mean = 1.0 - f - f * std::polar(1.0, params.phi());
  const Complex b1 = 2.0 * std::cos(theta) * std::polar(1.0, -theta) * oracle_mean;
  const Complex a1 = std::norm(b1) - std::polar(1.0, 2.0 * theta);
  return {a1, b1, 1};
}

ReducedCoeffs recurrence_step(const ReducedCoeffs& prev,
                              const ReducedCoeffs& first, double theta) {
  if (first.steps != 1) {
    throw std::invalid_argument("recurrence_step: 'first' must hold (A_1, B_1)");
  }
  const Complex rot = std::polar(1.0, -2.0 * theta);
  return {first.a * prev.a - rot * std::conj(first.b) * prev.b,
          first.b * prev.a - rot * prev.b, prev.steps + 1};
}

ReducedCoeffs lambda_power_coeffs(double f, const PhaseParams& params, int n) {
  if (n < 1) throw std::invalid_argument("lambda_power_coeffs: n must be >= 1");
  const ReducedCoeffs first = first_step_coeffs(f, params);
  ReducedCoeffs cur = first;
  while (cur.steps < n) cur = recurrence_step(cur, first, params.theta());
  return cur;
}

ReducedState reduced_run(double f, const PhaseParams& params, int member) {
  require_supported_member(member);
  if (member == 1) {
    // O_theta F_phi |Psi_0> = [2 cos(theta)(1 - f - f e^{i phi}) - e^{i theta} F_phi] |Psi_0>
    const double theta = params.theta();
    const Complex c =
        2.0 * std::cos(theta) * (1.0 - f - f * std::polar(1.0, params.phi()));
    const Complex diag = std::polar(1.0, theta);
    return {c + diag * std::polar(1.0, params.phi()), c - diag};
  }
  const ReducedCoeffs coeffs = lambda_power_coeffs(f, params, member / 2);
  // F_phi^dagger multiplies marked amplitudes by -e^{-i phi}.
  return {coeffs.a + std::polar(1.0, -params.phi()) * coeffs.b,
          coeffs.a - coeffs.b};
}

Complex sure_success_residual(double f, const PhaseParams& params, int member) {
  require_supported_member(member);
  if (member == 1) {
    const double theta = params.theta();
    return 2.0 * std::cos(theta) * (1.0 - f - f * std::polar(1.0, params.phi())) -
           std::polar(1.0, theta);
  }
  const ReducedCoeffs coeffs = lambda_power_coeffs(f, params, member / 2);
  return coeffs.a - coeffs.b;
}

}  // namespace suregrover

#pragma once

#include "suregrover/types.hpp"

namespace suregrover {

/// Coefficients of Lambda^n |Psi_0> = (A_n - B_n F_phi^dagger) |Psi_0>, where
/// Lambda = O_theta^dagger F_phi^dagger O_theta F_phi.
struct ReducedCoeffs {
  Complex a;
  Complex b;
  int steps = 1;
};

/// Amplitudes on the invariant 2-plane, scaled by sqrt(N): every marked
/// element carries marked / sqrt(N), every unmarked one unmarked / sqrt(N).
/// Unit norm reads f |marked|^2 + (1 - f) |unmarked|^2 = 1.
struct ReducedState {
  Complex marked;
  Complex unmarked;

  double success_probability(double f) const { return f * std::norm(marked); }
  double unmarked_probability(double f) const {
    return (1.0 - f) * std::norm(unmarked);
  }
};

/// B_1 = 2 cos(theta) e^{-i theta} (1 - f - f e^{i phi}),
/// A_1 = |B_1|^2 - e^{2 i theta}.
ReducedCoeffs first_step_coeffs(double f, const PhaseParams& params);

/// One application of the 2x2 recurrence
///   A_{n+1} = A_1 A_n - e^{-2 i theta} conj(B_1) B_n
///   B_{n+1} = B_1 A_n - e^{-2 i theta} B_n
/// Throws std::invalid_argument unless first.steps == 1.
ReducedCoeffs recurrence_step(const ReducedCoeffs& prev,
                              const ReducedCoeffs& first, double theta);

/// (A_n, B_n) after n >= 1 iterations of Lambda.
ReducedCoeffs lambda_power_coeffs(double f, const PhaseParams& params, int n);

/// Runs member A_m on the uniform start state inside the 2-plane.
/// Even m = 2n applies Lambda^n; m = 1 applies O_theta F_phi once.
/// Throws UnsupportedMember for odd m > 1 and std::invalid_argument for m < 1.
ReducedState reduced_run(double f, const PhaseParams& params, int member);

/// Complex sure-success residual of member m at (f, params):
/// A_n - B_n for even m = 2n, and 2 cos(theta)(1 - f - f e^{i phi}) - e^{i theta}
/// for m = 1. Zero exactly when every unmarked amplitude vanishes.
Complex sure_success_residual(double f, const PhaseParams& params, int member);

/// Throws UnsupportedMember / std::invalid_argument for members outside
/// {1} and the even integers >= 2.
void require_supported_member(int member);

}  // namespace suregrover

#pragma once

#include "suregrover/types.hpp"

namespace suregrover {

/// Every amplitude equal to 1/sqrt(N).
StateVector uniform_state(const ProblemInstance& instance);

// Generalized oracle F_phi: multiplies each marked amplitude by -exp(i phi).
// The adjoint is F_{-phi}. Unmarked amplitudes are not touched.
void apply_oracle_inplace(StateVector& state, const ProblemInstance& instance,
                          double phi, bool adjoint = false);
StateVector apply_oracle(const StateVector& state,
                         const ProblemInstance& instance, double phi,
                         bool adjoint = false);

// Generalized inversion about the mean O_theta:
//   C'_i = (2 cos(theta) / N) * sum_j C_j - exp(i theta) * C_i
// The adjoint is O_{-theta}. The sum is accumulated in index order so the
// result does not depend on the caller's threading.
void apply_diffusion_inplace(StateVector& state, double theta,
                             bool adjoint = false);
StateVector apply_diffusion(const StateVector& state, double theta,
                            bool adjoint = false);

inline constexpr std::size_t kMaxDenseDimension = 64;

/// Builds O_theta densely and returns max |(O^dagger O - I)_ij|.
/// Throws InputError for n_total > kMaxDenseDimension or n_total == 0.
double check_unitarity(double theta, std::size_t n_total);

}  // namespace suregrover

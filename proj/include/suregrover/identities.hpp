#pragma once

#include "suregrover/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace suregrover {

/// 2x2 complex matrix, row-major.
using Matrix2 = std::array<Complex, 4>;

/// F_phi and O_theta restricted to the invariant 2-plane, in the orthonormal
/// basis (uniform over marked, uniform over unmarked). Built directly from
/// the operator definitions; independent of the (A_n, B_n) recurrence.
Matrix2 plane_oracle(double phi);
Matrix2 plane_diffusion(double f, double theta);
Matrix2 plane_lambda(double f, double theta, double phi);
Matrix2 multiply(const Matrix2& a, const Matrix2& b);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed deviation
  double tolerance = 0.0;
  std::string detail;
};

struct IdentityOptions {
  std::vector<int> members{2, 4, 6};
  int samples = 100;
  int max_power = 16;
  std::uint64_t seed = 20020112;
  /// Test hook: negates B_1 before it enters the recurrence check.
  bool inject_b1_sign_flip = false;
};

IdentityCheck check_diffusion_unitarity(const IdentityOptions& opts);
IdentityCheck check_first_step_identity(const IdentityOptions& opts);
IdentityCheck check_recurrence_vs_matrix(const IdentityOptions& opts);
/// Stored vs generated polynomials for members 2/4/6 in opts.members; for
/// other even members, generated polynomial vs numeric residual.
IdentityCheck check_polynomial_identities(const IdentityOptions& opts);
IdentityCheck check_mirror_symmetry(const IdentityOptions& opts);

std::vector<IdentityCheck> run_identity_checks(const IdentityOptions& opts);

}  // namespace suregrover

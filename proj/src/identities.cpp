#include "suregrover/identities.hpp"

#include "suregrover/condition_poly.hpp"
#include "suregrover/dynamics.hpp"
#include "suregrover/operators.hpp"
#include "suregrover/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace suregrover {

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 plane_oracle(double phi) {
  return {-std::polar(1.0, phi), Complex(0.0), Complex(0.0), Complex(1.0)};
}

Matrix2 plane_diffusion(double f, double theta) {
  // 2 cos(theta) |s><s| - e^{i theta} I with s = (sqrt f, sqrt(1 - f)).
  const double sm = std::sqrt(f);
  const double su = std::sqrt(1.0 - f);
  const double c = 2.0 * std::cos(theta);
  const Complex d = std::polar(1.0, theta);
  return {c * sm * sm - d, Complex(c * sm * su), Complex(c * su * sm), c * su * su - d};
}

Matrix2 plane_lambda(double f, double theta, double phi) {
  return multiply(plane_diffusion(f, -theta),
                  multiply(plane_oracle(-phi),
                           multiply(plane_diffusion(f, theta), plane_oracle(phi))));
}

namespace {

std::string format_worst(double worst, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << "max deviation " << std::scientific << worst << " (tol " << tol << ")";
  return os.str();
}

IdentityCheck finish(std::string name, double worst, double tol, std::string detail = {}) {
  IdentityCheck c;
  c.name = std::move(name);
  c.worst = worst;
  c.tolerance = tol;
  c.passed = std::isfinite(worst) && worst < tol;
  c.detail = format_worst(worst, tol);
  if (!detail.empty()) c.detail += "; " + detail;
  return c;
}

}  // namespace

IdentityCheck check_diffusion_unitarity(const IdentityOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_int_distribution<std::size_t> dim(1, 16);
  double worst = 0.0;
  for (int i = 0; i < opts.samples; ++i) {
    worst = std::max(worst, check_unitarity(angle(rng), dim(rng)));
  }
  return finish("diffusion unitarity (dense, N <= 16)", worst, 1e-13);
}

IdentityCheck check_first_step_identity(const IdentityOptions& opts) {
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < opts.samples; ++i) {
    const double f = unit(rng);
    const PhaseParams params(angle(rng), angle(rng));
    const ReducedCoeffs first = first_step_coeffs(f, params);
    const double c = 2.0 * std::cos(params.theta());
    const Complex expected_a =
        c * c * std::norm(1.0 - f - f * std::polar(1.0, params.phi())) -
        std::polar(1.0, 2.0 * params.theta());
    const Complex identity = std::norm(first.b) - std::polar(1.0, 2.0 * params.theta());
    worst = std::max({worst, std::abs(first.a - identity), std::abs(first.a - expected_a)});
  }
  return finish("A_1 = |B_1|^2 - e^{2 i theta}", worst, 1e-13);
}

IdentityCheck check_recurrence_vs_matrix(const IdentityOptions& opts) {
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  // |phi| <= 2 keeps 1 + e^{-i phi} away from zero for the (A, B) inversion.
  std::uniform_real_distribution<double> oracle_angle(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < opts.samples; ++i) {
    const double f = frac(rng);
    const PhaseParams params(angle(rng), oracle_angle(rng));
    const double theta = params.theta();
    const double phi = params.phi();

    ReducedCoeffs first = first_step_coeffs(f, params);
    if (opts.inject_b1_sign_flip) first.b = -first.b;

    const Matrix2 lambda = plane_lambda(f, theta, phi);
    Complex vm = std::sqrt(f);
    Complex vu = std::sqrt(1.0 - f);
    ReducedCoeffs cur = first;
    for (int n = 1; n <= opts.max_power; ++n) {
      const Complex nm = lambda[0] * vm + lambda[1] * vu;
      const Complex nu = lambda[2] * vm + lambda[3] * vu;
      vm = nm;
      vu = nu;
      if (n > 1) cur = recurrence_step(cur, first, theta);

      // Matrix-derived (A_n, B_n) from v = (sqrt f (A + e^{-i phi} B), sqrt(1-f) (A - B)).
      const Complex diff = vu / std::sqrt(1.0 - f);
      const Complex sum = vm / std::sqrt(f);
      const Complex b = (sum - diff) / (1.0 + std::polar(1.0, -phi));
      const Complex a = diff + b;
      worst = std::max({worst, std::abs(cur.a - a), std::abs(cur.b - b)});
    }
  }
  return finish("recurrence (A_n, B_n) vs 2-plane matrix powers, n <= " +
                    std::to_string(opts.max_power),
                worst, 1e-11);
}

IdentityCheck check_polynomial_identities(const IdentityOptions& opts) {
  std::mt19937_64 rng(opts.seed + 3);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::uniform_real_distribution<double> half_turn(0.0, 0.5 * kPi);
  double worst = 0.0;
  bool exact_ok = true;
  std::vector<int> exact_members, im_members;
  for (int member : opts.members) {
    if (member < 2 || member % 2 != 0) continue;
    const ConditionPolynomial generated = generate_condition_polynomial(member);
    if (member <= 6) {
      const bool same = generated == stored_condition_polynomial(member);
      exact_ok = exact_ok && same;
      if (same) exact_members.push_back(member);
    }
    for (int i = 0; i < 200; ++i) {
      const double f = frac(rng);
      const double theta = half_turn(rng);
      const double mu = std::cos(theta);
      const double poly = generated.evaluate(f, mu * mu);
      const double numeric = sure_success_residual(f, {theta, 2.0 * theta}, member).real();
      worst = std::max(worst, std::abs(poly - numeric));
    }
    if (imaginary_residual_vanishes(member)) im_members.push_back(member);
  }
  const auto join = [](const std::vector<int>& v) {
    std::string out;
    for (int m : v) out += (out.empty() ? "" : ",") + std::to_string(m);
    return out.empty() ? std::string("none") : out;
  };
  const std::string detail = "exact match for members " + join(exact_members) +
                             "; Im(A_n - B_n) vanishes at phi = 2 theta for members " + join(im_members);
  IdentityCheck c = finish("condition polynomials (exact + numeric)", worst, 1e-9, detail);
  c.passed = c.passed && exact_ok;
  return c;
}

IdentityCheck check_mirror_symmetry(const IdentityOptions& opts) {
  std::mt19937_64 rng(opts.seed + 4);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::vector<int> members{1};
  for (int m : opts.members) {
    if (m >= 2 && m % 2 == 0) members.push_back(m);
  }
  double worst = 0.0;
  for (int member : members) {
    for (int i = 0; i < opts.samples; ++i) {
      const double f = frac(rng);
      const PhaseParams params(angle(rng), angle(rng));
      const ReducedState a = reduced_run(f, params, member);
      const ReducedState b = reduced_run(f, params.mirrored(), member);
      worst = std::max({worst, std::abs(b.marked - std::conj(a.marked)),
                        std::abs(b.unmarked - std::conj(a.unmarked))});
    }
    for (double f : {0.3, 0.5, 0.7}) {
      const SolutionSet set = solve(f, member);
      for (int k = 0; k < set.count(); ++k) {
        worst = std::max(worst, std::abs(sure_success_residual(f, set.params(k).mirrored(), member)));
      }
    }
  }
  return finish("mirror symmetry (-theta, -phi)", worst, 1e-10);
}

std::vector<IdentityCheck> run_identity_checks(const IdentityOptions& opts) {
  return {check_diffusion_unitarity(opts), check_first_step_identity(opts),
          check_recurrence_vs_matrix(opts), check_polynomial_identities(opts),
          check_mirror_symmetry(opts)};
}

}  // namespace suregrover

#pragma once

#include "suregrover/exact_poly.hpp"

#include <vector>

namespace suregrover {

/// Re(A_n - B_n) for member 2n with phi = 2 theta, written as
///   sum_k coeffs[k](f) * x^k,   x = mu^2 = cos^2(theta).
struct ConditionPolynomial {
  int member = 0;
  std::vector<exact::RationalPoly> coeffs;

  /// Degree in x (so degree in mu is twice this).
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Collapses the f-dependence at a concrete fraction: returns the double
  /// coefficients of the polynomial in x, lowest power first.
  std::vector<double> at_fraction(double f) const;

  /// Evaluates at (f, x).
  double evaluate(double f, double x) const;

  bool operator==(const ConditionPolynomial& o) const {
    return member == o.member && coeffs == o.coeffs;
  }
};

/// The stored closed forms for members 2, 4 and 6, entered in factored
/// f^p (1-f)^q shape. Throws std::invalid_argument for other members.
ConditionPolynomial stored_condition_polynomial(int member);

/// Expands the recurrence exactly (phi = 2 theta) and extracts the real part
/// of A_n - B_n. Works for every even member; throws UnsupportedMember for odd.
ConditionPolynomial generate_condition_polynomial(int member);

/// Stored form for 2/4/6, generated (and cached) for even members >= 8.
ConditionPolynomial condition_polynomial(int member);

/// Exact residual A_n - B_n (phi = 2 theta) as a trigonometric polynomial.
exact::TrigPoly exact_residual(int member);

/// True when Im(A_n - B_n) vanishes identically once phi = 2 theta.
bool imaginary_residual_vanishes(int member);

/// Horner evaluation of a double polynomial, lowest power first.
double horner(const std::vector<double>& coeffs, double x);

}  // namespace suregrover

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace suregrover::exact {

/// Dense univariate polynomial with rational coefficients, lowest power
/// first. Always kept normalized (no trailing zero coefficients).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);
  static RationalPoly constant(const mpq_class& c);
  static RationalPoly monomial(const mpq_class& c, std::size_t power);

  /// c * x^p * (1 - x)^q, the factored shape used for the stored conditions.
  static RationalPoly scaled_product(long c, std::size_t p, std::size_t q);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t power) const;

  mpq_class evaluate_exact(const mpq_class& x) const;
  /// Exact evaluation at the binary value of x, rounded once to double.
  double evaluate(double x) const;

  RationalPoly operator+(const RationalPoly& other) const;
  RationalPoly operator-(const RationalPoly& other) const;
  RationalPoly operator*(const RationalPoly& other) const;
  bool operator==(const RationalPoly& other) const { return coeffs_ == other.coeffs_; }

  /// Human-readable form in the given variable name, e.g. "4*f - 16*f^2".
  std::string to_string(const std::string& var = "f") const;

 private:
  void normalize();
  std::vector<mpq_class> coeffs_;
};

struct GaussianRational {
  mpq_class re;
  mpq_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

/// Dense polynomial in (f, mu) with Gaussian-rational coefficients;
/// entry (i, j) multiplies f^i mu^j.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  BivariatePoly(std::size_t f_terms, std::size_t mu_terms);

  std::size_t f_terms() const { return f_terms_; }
  std::size_t mu_terms() const { return mu_terms_; }
  const GaussianRational& at(std::size_t i, std::size_t j) const {
    return coeffs_[i * mu_terms_ + j];
  }
  GaussianRational& at(std::size_t i, std::size_t j) { return coeffs_[i * mu_terms_ + j]; }
  /// Zero when (i, j) lies outside the stored block.
  GaussianRational get(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly conj() const;

 private:
  std::size_t f_terms_ = 0;
  std::size_t mu_terms_ = 0;
  std::vector<GaussianRational> coeffs_;
};

/// Trigonometric polynomial even + s * odd in f, mu = cos(theta) and
/// s = sin(theta), reduced with s^2 = 1 - mu^2. f, mu, s are real, so
/// conjugation acts on the coefficients only.
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(BivariatePoly even, BivariatePoly odd)
      : even_(std::move(even)), odd_(std::move(odd)) {}

  static TrigPoly constant(long re, long im = 0);
  static TrigPoly fraction();  // f
  static TrigPoly cos_theta();  // mu
  static TrigPoly sin_theta();  // s
  /// e^{i k theta} = (mu + i s)^k for integer k (negative allowed).
  static TrigPoly exp_i_theta(int k);

  const BivariatePoly& even() const { return even_; }
  const BivariatePoly& odd() const { return odd_; }

  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator-(const TrigPoly& o) const;
  TrigPoly operator*(const TrigPoly& o) const;
  TrigPoly conj() const;

  /// Numeric evaluation at (f, theta); returns (re, im).
  std::pair<double, double> evaluate(double f, double theta) const;

 private:
  BivariatePoly even_;
  BivariatePoly odd_;
};

}  // namespace suregrover::exact

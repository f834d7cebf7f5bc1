#include "suregrover/exact_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace suregrover::exact {

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

RationalPoly RationalPoly::constant(const mpq_class& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const mpq_class& c, std::size_t power) {
  std::vector<mpq_class> v(power + 1, mpq_class(0));
  v[power] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::scaled_product(long c, std::size_t p, std::size_t q) {
  const RationalPoly one_minus_x({mpq_class(1), mpq_class(-1)});
  RationalPoly out = monomial(mpq_class(c), p);
  for (std::size_t k = 0; k < q; ++k) out = out * one_minus_x;
  return out;
}

void RationalPoly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class RationalPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : mpq_class(0);
}

mpq_class RationalPoly::evaluate_exact(const mpq_class& x) const {
  mpq_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::evaluate(double x) const {
  // Every double is an exact binary fraction, so this rounds only once.
  return mpq_class(evaluate_exact(mpq_class(x))).get_d();
}

RationalPoly RationalPoly::operator+(const RationalPoly& other) const {
  std::vector<mpq_class> v(std::max(coeffs_.size(), other.coeffs_.size()), mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) v[i] += other.coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& other) const {
  std::vector<mpq_class> v(std::max(coeffs_.size(), other.coeffs_.size()), mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) v[i] -= other.coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const RationalPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<mpq_class> v(coeffs_.size() + other.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return RationalPoly(std::move(v));
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0 || !unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

BivariatePoly::BivariatePoly(std::size_t f_terms, std::size_t mu_terms)
    : f_terms_(f_terms), mu_terms_(mu_terms), coeffs_(f_terms * mu_terms) {}

GaussianRational BivariatePoly::get(std::size_t i, std::size_t j) const {
  if (i >= f_terms_ || j >= mu_terms_) return {};
  return at(i, j);
}

bool BivariatePoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const GaussianRational& c) { return c.is_zero(); });
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly out(std::max(f_terms_, o.f_terms_), std::max(mu_terms_, o.mu_terms_));
  for (std::size_t i = 0; i < out.f_terms_; ++i) {
    for (std::size_t j = 0; j < out.mu_terms_; ++j) out.at(i, j) = get(i, j) + o.get(i, j);
  }
  return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
  BivariatePoly out(std::max(f_terms_, o.f_terms_), std::max(mu_terms_, o.mu_terms_));
  for (std::size_t i = 0; i < out.f_terms_; ++i) {
    for (std::size_t j = 0; j < out.mu_terms_; ++j) out.at(i, j) = get(i, j) - o.get(i, j);
  }
  return out;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  if (f_terms_ == 0 || o.f_terms_ == 0 || mu_terms_ == 0 || o.mu_terms_ == 0) return {};
  BivariatePoly out(f_terms_ + o.f_terms_ - 1, mu_terms_ + o.mu_terms_ - 1);
  for (std::size_t i = 0; i < f_terms_; ++i) {
    for (std::size_t j = 0; j < mu_terms_; ++j) {
      const GaussianRational& a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.f_terms_; ++k) {
        for (std::size_t l = 0; l < o.mu_terms_; ++l) {
          const GaussianRational& b = o.at(k, l);
          if (b.is_zero()) continue;
          GaussianRational& dst = out.at(i + k, j + l);
          dst = dst + a * b;
        }
      }
    }
  }
  return out;
}

BivariatePoly BivariatePoly::conj() const {
  BivariatePoly out = *this;
  for (auto& c : out.coeffs_) c.im = -c.im;
  return out;
}

namespace {

BivariatePoly single(std::size_t f_pow, std::size_t mu_pow, long re, long im) {
  BivariatePoly p(f_pow + 1, mu_pow + 1);
  p.at(f_pow, mu_pow) = {mpq_class(re), mpq_class(im)};
  return p;
}

// 1 - mu^2, the reduction of s^2.
const BivariatePoly& sin_squared() {
  static const BivariatePoly p = single(0, 0, 1, 0) - single(0, 2, 1, 0);
  return p;
}

}  // namespace

TrigPoly TrigPoly::constant(long re, long im) { return {single(0, 0, re, im), {}}; }
TrigPoly TrigPoly::fraction() { return {single(1, 0, 1, 0), {}}; }
TrigPoly TrigPoly::cos_theta() { return {single(0, 1, 1, 0), {}}; }
TrigPoly TrigPoly::sin_theta() { return {{}, single(0, 0, 1, 0)}; }

TrigPoly TrigPoly::exp_i_theta(int k) {
  const TrigPoly base = k >= 0 ? cos_theta() + constant(0, 1) * sin_theta()
                               : cos_theta() - constant(0, 1) * sin_theta();
  TrigPoly out = constant(1);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const { return {even_ + o.even_, odd_ + o.odd_}; }
TrigPoly TrigPoly::operator-(const TrigPoly& o) const { return {even_ - o.even_, odd_ - o.odd_}; }

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
  BivariatePoly even = even_ * o.even_ + sin_squared() * (odd_ * o.odd_);
  BivariatePoly odd = even_ * o.odd_ + odd_ * o.even_;
  return {std::move(even), std::move(odd)};
}

TrigPoly TrigPoly::conj() const { return {even_.conj(), odd_.conj()}; }

std::pair<double, double> TrigPoly::evaluate(double f, double theta) const {
  const double mu = std::cos(theta);
  const double s = std::sin(theta);
  auto eval = [&](const BivariatePoly& p) {
    double re = 0.0, im = 0.0;
    double fp = 1.0;
    for (std::size_t i = 0; i < p.f_terms(); ++i) {
      double mp = 1.0;
      for (std::size_t j = 0; j < p.mu_terms(); ++j) {
        re += p.at(i, j).re.get_d() * fp * mp;
        im += p.at(i, j).im.get_d() * fp * mp;
        mp *= mu;
      }
      fp *= f;
    }
    return std::make_pair(re, im);
  };
  const auto [er, ei] = eval(even_);
  const auto [orr, oi] = eval(odd_);
  return {er + s * orr, ei + s * oi};
}

}  // namespace suregrover::exact

#include "suregrover/condition_poly.hpp"

#include "suregrover/dynamics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace suregrover {

using exact::RationalPoly;
using exact::TrigPoly;

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> ConditionPolynomial::at_fraction(double f) const {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.evaluate(f));
  return out;
}

double ConditionPolynomial::evaluate(double f, double x) const {
  return horner(at_fraction(f), x);
}

ConditionPolynomial stored_condition_polynomial(int member) {
  const auto term = RationalPoly::scaled_product;
  ConditionPolynomial p{member, {}};
  switch (member) {
    case 2:
      p.coeffs = {term(1, 0, 0), term(4, 1, 0), term(-16, 1, 1)};
      break;
    case 4:
      p.coeffs = {term(1, 0, 0), term(8, 1, 0), term(-48, 1, 1), term(-64, 2, 1),
                  term(256, 2, 2)};
      break;
    case 6:
      p.coeffs = {term(1, 0, 0),     term(12, 1, 0),    term(-96, 1, 1),
                  term(-256, 2, 1),  term(1280, 2, 2),  term(1024, 3, 2),
                  term(-4096, 3, 3)};
      break;
    default:
      throw std::invalid_argument("no stored condition polynomial for member " +
                                  std::to_string(member));
  }
  return p;
}

exact::TrigPoly exact_residual(int member) {
  require_supported_member(member);
  if (member == 1) {
    throw UnsupportedMember("exact residual is defined for even members only");
  }
  const TrigPoly f = TrigPoly::fraction();
  const TrigPoly one = TrigPoly::constant(1);
  const TrigPoly mu = TrigPoly::cos_theta();

  // phi = 2 theta, so e^{i phi} = e^{2 i theta}.
  const TrigPoly oracle_mean = one - f - f * TrigPoly::exp_i_theta(2);
  const TrigPoly b1 = TrigPoly::constant(2) * mu * TrigPoly::exp_i_theta(-1) * oracle_mean;
  const TrigPoly a1 = b1 * b1.conj() - TrigPoly::exp_i_theta(2);
  const TrigPoly rot = TrigPoly::exp_i_theta(-2);
  const TrigPoly rot_b1_conj = rot * b1.conj();

  TrigPoly a = a1;
  TrigPoly b = b1;
  for (int step = 1; step < member / 2; ++step) {
    TrigPoly next_a = a1 * a - rot_b1_conj * b;
    TrigPoly next_b = b1 * a - rot * b;
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return a - b;
}

bool imaginary_residual_vanishes(int member) {
  const TrigPoly r = exact_residual(member);
  for (const auto* part : {&r.even(), &r.odd()}) {
    for (std::size_t i = 0; i < part->f_terms(); ++i) {
      for (std::size_t j = 0; j < part->mu_terms(); ++j) {
        if (sgn(part->at(i, j).im) != 0) return false;
      }
    }
  }
  return true;
}

ConditionPolynomial generate_condition_polynomial(int member) {
  const TrigPoly r = exact_residual(member);

  const auto& odd = r.odd();
  for (std::size_t i = 0; i < odd.f_terms(); ++i) {
    for (std::size_t j = 0; j < odd.mu_terms(); ++j) {
      if (sgn(odd.at(i, j).re) != 0) {
        throw std::logic_error("Re(A_n - B_n) has a sin(theta) component");
      }
    }
  }

  const auto& even = r.even();
  ConditionPolynomial p{member, {}};
  for (std::size_t j = 0; j < even.mu_terms(); ++j) {
    std::vector<mpq_class> in_f(even.f_terms(), mpq_class(0));
    for (std::size_t i = 0; i < even.f_terms(); ++i) in_f[i] = even.at(i, j).re;
    RationalPoly c(std::move(in_f));
    if (j % 2 == 1) {
      if (!c.is_zero()) throw std::logic_error("Re(A_n - B_n) has an odd power of cos(theta)");
      continue;
    }
    p.coeffs.push_back(std::move(c));
  }
  while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
  return p;
}

ConditionPolynomial condition_polynomial(int member) {
  require_supported_member(member);
  if (member == 1) {
    throw UnsupportedMember("member 1 has a closed-form condition, not a polynomial family");
  }
  if (member <= 6) return stored_condition_polynomial(member);

  static std::mutex mu;
  static std::map<int, ConditionPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(member);
    if (it != cache.end()) return it->second;
  }
  ConditionPolynomial p = generate_condition_polynomial(member);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(member, std::move(p)).first->second;
}

}  // namespace suregrover

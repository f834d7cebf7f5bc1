#include "suregrover/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace suregrover {

double canonical_angle(double radians) {
  if (radians > -kPi && radians <= kPi) return radians;
  double r = std::remainder(radians, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

PhaseParams::PhaseParams(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw InputError("phase parameters must be finite");
  }
  theta_ = canonical_angle(theta);
  phi_ = canonical_angle(phi);
}

ProblemInstance::ProblemInstance(std::size_t n_total,
                                 std::vector<std::size_t> marked)
    : n_total_(n_total), marked_(std::move(marked)) {
  if (n_total_ == 0) throw InputError("database size must be positive");
  if (marked_.empty()) throw InputError("marked set must be non-empty");
  std::sort(marked_.begin(), marked_.end());
  if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
    throw InputError("marked indices must be distinct");
  }
  if (marked_.back() >= n_total_) {
    throw InputError("marked index " + std::to_string(marked_.back()) +
                     " out of range for N=" + std::to_string(n_total_));
  }
}

ProblemInstance ProblemInstance::random(std::size_t n_total,
                                        std::size_t marked_count,
                                        std::uint64_t seed) {
  if (marked_count == 0 || marked_count > n_total) {
    throw InputError("marked count must lie in [1, N]");
  }
  std::vector<std::size_t> all(n_total);
  for (std::size_t i = 0; i < n_total; ++i) all[i] = i;
  // Partial Fisher-Yates with an explicit engine so the draw is reproducible
  // across standard library implementations.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < marked_count; ++i) {
    const std::size_t span = n_total - i;
    const std::size_t j = i + static_cast<std::size_t>(rng() % span);
    std::swap(all[i], all[j]);
  }
  all.resize(marked_count);
  return ProblemInstance(n_total, std::move(all));
}

ProblemInstance ProblemInstance::leading(std::size_t n_total,
                                         std::size_t marked_count) {
  if (marked_count == 0 || marked_count > n_total) {
    throw InputError("marked count must lie in [1, N]");
  }
  std::vector<std::size_t> marked(marked_count);
  for (std::size_t i = 0; i < marked_count; ++i) marked[i] = i;
  return ProblemInstance(n_total, std::move(marked));
}

bool ProblemInstance::is_marked(std::size_t index) const {
  return std::binary_search(marked_.begin(), marked_.end(), index);
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& c : amplitudes_) total += std::norm(c);
  return total;
}

StateVector uniform_state(const ProblemInstance& instance) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(instance.n_total()));
  return StateVector(std::vector<Complex>(instance.n_total(), Complex(amp, 0.0)));
}

void apply_oracle_inplace(StateVector& state, const ProblemInstance& instance,
                          double phi, bool adjoint) {
  if (state.size() != instance.n_total()) {
    throw DimensionError("oracle: state has " + std::to_string(state.size()) +
                         " amplitudes, instance has N=" +
                         std::to_string(instance.n_total()));
  }
  const Complex factor = -std::polar(1.0, adjoint ? -phi : phi);
  for (std::size_t idx : instance.marked()) state[idx] *= factor;
}

StateVector apply_oracle(const StateVector& state,
                         const ProblemInstance& instance, double phi,
                         bool adjoint) {
  StateVector out = state;
  apply_oracle_inplace(out, instance, phi, adjoint);
  return out;
}

void apply_diffusion_inplace(StateVector& state, double theta, bool adjoint) {
  const std::size_t n = state.size();
  if (n == 0) throw DimensionError("diffusion: empty state");
  const double t = adjoint ? -theta : theta;

  Complex sum(0.0, 0.0);
  for (const Complex& c : state.amplitudes()) sum += c;

  const Complex mean_term = (2.0 * std::cos(t) / static_cast<double>(n)) * sum;
  const Complex diag = std::polar(1.0, t);
  for (Complex& c : state.amplitudes()) c = mean_term - diag * c;
}

StateVector apply_diffusion(const StateVector& state, double theta,
                            bool adjoint) {
  StateVector out = state;
  apply_diffusion_inplace(out, theta, adjoint);
  return out;
}

double check_unitarity(double theta, std::size_t n_total) {
  if (n_total == 0 || n_total > kMaxDenseDimension) {
    throw InputError("check_unitarity builds a dense matrix; N must lie in [1, " +
                     std::to_string(kMaxDenseDimension) + "]");
  }
  const std::size_t n = n_total;
  const Complex off(2.0 * std::cos(theta) / static_cast<double>(n), 0.0);
  const Complex diag = std::polar(1.0, theta);

  std::vector<Complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = off - (i == j ? diag : Complex(0.0, 0.0));
    }
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        acc += std::conj(m[k * n + i]) * m[k * n + j];
      }
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace suregrover

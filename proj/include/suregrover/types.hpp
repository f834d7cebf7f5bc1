#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace suregrover {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Error hierarchy. The CLI maps these onto exit codes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for algorithm members that are defined but not analyzed
/// (odd members above 1).
class UnsupportedMember : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Maps an angle onto (-pi, pi]. Values already in that range are returned
/// unchanged, bit for bit.
double canonical_angle(double radians);

/// The two phase angles of the generalized oracle (phi) and diffusion
/// (theta) operators. Canonicalized to (-pi, pi] at construction.
class PhaseParams {
 public:
  PhaseParams() = default;
  PhaseParams(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// The mirrored pair (-theta, -phi).
  PhaseParams mirrored() const { return {-theta_, -phi_}; }

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

/// A database of n_total elements with an explicit, sorted set of marked
/// (acceptable) indices.
class ProblemInstance {
 public:
  ProblemInstance(std::size_t n_total, std::vector<std::size_t> marked);

  /// Draws a marked set of the given size uniformly at random.
  static ProblemInstance random(std::size_t n_total, std::size_t marked_count,
                                std::uint64_t seed);

  /// Marks the first marked_count indices.
  static ProblemInstance leading(std::size_t n_total, std::size_t marked_count);

  std::size_t n_total() const { return n_total_; }
  std::span<const std::size_t> marked() const { return marked_; }
  std::size_t marked_count() const { return marked_.size(); }
  double fraction() const {
    return static_cast<double>(marked_.size()) / static_cast<double>(n_total_);
  }
  bool is_marked(std::size_t index) const;

 private:
  std::size_t n_total_;
  std::vector<std::size_t> marked_;
};

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes)
      : amplitudes_(std::move(amplitudes)) {}

  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  /// Sum of squared moduli, accumulated in index order.
  double norm_squared() const;

 private:
  std::vector<Complex> amplitudes_;
};

}  // namespace suregrover

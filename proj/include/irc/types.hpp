#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace irc {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when an iterative scheme fails to reach its tolerance.
struct IterationLimitError : std::runtime_error {
  IterationLimitError(const std::string& what, Scalar last_residual)
      : std::runtime_error(what), residual(last_residual) {}
  Scalar residual;
};

/// Thrown on numerical breakdown (singular system, dead-end likelihood, ...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic random source. mt19937_64 has standardized output, and all
/// variate draws below are derived from it by explicit arithmetic, so streams
/// are bit-reproducible across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1) with 53 random bits.
  Scalar uniform() {
    return static_cast<Scalar>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(Scalar p) { return uniform() < p; }

  /// Samples an index from a probability vector by CDF walk.
  int categorical(const Vector& probs) {
    const Scalar u = uniform();
    Scalar acc = 0.0;
    const int n = static_cast<int>(probs.size());
    for (int i = 0; i < n; ++i) {
      acc += probs[i];
      if (u < acc) return i;
    }
    return n - 1;  // guards against round-off in the final bin
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace irc

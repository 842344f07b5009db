#pragma once

#include <cstdint>
#include <random>

#include "irsmimo/types.hpp"

namespace irsmimo {

// Deterministic random stream. Every draw is an explicit transform of 64-bit
// uniforms from a fully specified generator, so a given seed reproduces the
// same sequence on any platform and under any thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Private stream for one Monte Carlo trial, derived from the master seed
  // and the trial index.
  static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial);

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // N(0, 1), Box-Muller
  double normal(double mean, double stddev);
  Complex complex_normal();              // CN(0, 1)
  double azimuth();                      // uniform on (-pi/2, pi/2)

 private:
  std::mt19937_64 gen_;
};

// Quantile function of the standard normal distribution.
double inverse_normal_cdf(double p);

}  // namespace irsmimo

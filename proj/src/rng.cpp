#include "irsmimo/rng.hpp"

#include <boost/math/distributions/normal.hpp>

namespace irsmimo {

Rng::Rng(std::uint64_t seed) : gen_(seed) {}

Rng Rng::for_trial(std::uint64_t master_seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  Rng rng(0);
  rng.gen_.seed(seq);
  return rng;
}

double Rng::uniform() {
  // Top 53 bits -> [0, 1) with full double resolution.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double Rng::normal(double mean, double stddev) { return mean + stddev * normal(); }

Complex Rng::complex_normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-std::log(u1));
  return {radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2)};
}

double Rng::azimuth() { return (uniform() - 0.5) * kPi; }

double inverse_normal_cdf(double p) {
  static const boost::math::normal_distribution<double> unit_normal;
  return boost::math::quantile(unit_normal, p);
}

}  // namespace irsmimo

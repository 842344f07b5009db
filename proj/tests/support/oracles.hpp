// Independent reference computations used as test oracles. Everything here
// is deliberately brute force and shares no code with the library paths it
// checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846;

// |sum_n exp(j*2*pi*spacing*delta*n)| / M evaluated term by term.
inline double dirichlet_direct_sum(int element_count, double spacing, double sine_delta) {
  std::complex<double> sum = 0.0;
  for (int n = 0; n < element_count; ++n) {
    sum += std::polar(1.0, 2.0 * kPi * spacing * sine_delta * n);
  }
  return std::abs(sum) / element_count;
}

inline double rate_of_allocation(std::span<const double> gains,
                                 std::span<const double> powers, double noise_power) {
  double rate = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    rate += std::log2(1.0 + powers[i] * gains[i] / noise_power);
  }
  return rate;
}

// Water-level search: a uniform grid over candidate levels brackets the level
// that spends the whole budget, then bisection tightens the bracket. Returns
// the rate of the allocation at the located level, rescaled so the budget is
// met exactly.
inline double waterfilling_rate_grid_search(std::span<const double> gains, double total_power,
                                            double noise_power, int grid_points = 10000) {
  std::vector<double> levels;  // noise-to-gain of usable streams
  for (double gain : gains) {
    if (gain > 0.0) levels.push_back(noise_power / gain);
  }
  if (levels.empty()) return 0.0;
  const auto spent = [&](double mu) {
    double power = 0.0;
    for (double level : levels) power += std::max(0.0, mu - level);
    return power;
  };

  double lo = *std::min_element(levels.begin(), levels.end());
  double hi = *std::max_element(levels.begin(), levels.end()) + total_power;
  double previous = lo;
  for (int i = 1; i <= grid_points; ++i) {
    const double mu = lo + (hi - lo) * static_cast<double>(i) / grid_points;
    if (spent(mu) >= total_power) {
      hi = mu;
      lo = previous;
      break;
    }
    previous = mu;
  }
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (spent(mid) < total_power) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mu = 0.5 * (lo + hi);

  std::vector<double> powers(gains.size(), 0.0);
  double used = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (gains[i] > 0.0) {
      powers[i] = std::max(0.0, mu - noise_power / gains[i]);
      used += powers[i];
    }
  }
  if (used > 0.0) {
    for (double& p : powers) p *= total_power / used;  // spend the budget exactly
  }
  return rate_of_allocation(gains, powers, noise_power);
}

// Exhaustive active-set search: every nonempty subset gets its closed-form
// water level; infeasible subsets (nonpositive powers) are skipped and the
// best feasible rate wins. Only sensible for small stream counts.
inline double waterfilling_rate_enumeration(std::span<const double> gains, double total_power,
                                            double noise_power) {
  const std::size_t count = gains.size();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
    double level_sum = 0.0;
    int members = 0;
    bool usable = true;
    for (std::size_t i = 0; i < count && usable; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (gains[i] <= 0.0) {
          usable = false;
        } else {
          level_sum += noise_power / gains[i];
          ++members;
        }
      }
    }
    if (!usable) continue;
    const double mu = (total_power + level_sum) / members;
    std::vector<double> powers(count, 0.0);
    bool feasible = true;
    for (std::size_t i = 0; i < count && feasible; ++i) {
      if (mask & (std::size_t{1} << i)) {
        powers[i] = mu - noise_power / gains[i];
        feasible = powers[i] > 0.0;
      }
    }
    if (!feasible) continue;
    best = std::max(best, rate_of_allocation(gains, powers, noise_power));
  }
  return best;
}

inline double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double value : values) sum += value;
  return sum / static_cast<double>(values.size());
}

inline double stddev_of(std::span<const double> values) {
  const double mean = mean_of(values);
  double sum = 0.0;
  for (double value : values) sum += (value - mean) * (value - mean);
  return std::sqrt(sum / static_cast<double>(values.size() - 1));
}

}  // namespace oracles

#pragma once

#include <span>
#include <vector>

#include "irsmimo/channel.hpp"
#include "irsmimo/rng.hpp"

namespace irsmimo {

// SVD-based precoder/combiner pair: columns are the top singular vectors of
// the channel, singular values sorted descending.
struct Transceiver {
  ComplexMatrix precoder;  // tx x streams
  ComplexMatrix combiner;  // rx x streams
  RealVector singular_values;

  int stream_count() const { return static_cast<int>(singular_values.size()); }
};

Transceiver svd_transceiver(const ComplexMatrix& channel, int stream_count);

// Singular values below relative_cutoff * largest are treated as zero.
std::vector<double> usable_power_gains(const ComplexMatrix& channel,
                                       double relative_cutoff = 1e-12);

struct PowerAllocation {
  std::vector<double> stream_powers;  // aligned with the input gains; zeros allowed
  double total_power = 0.0;
  double noise_power = 0.0;

  int active_streams() const;
};

// Waterfilling over parallel channels with power gains `gains` (squared
// singular values): p_l = max(0, mu - noise/gain_l) with mu set so the powers
// sum to total_power. Exact closed form per active-set size, largest feasible
// active set wins. Throws when every gain is zero.
PowerAllocation waterfilling(std::span<const double> gains, double total_power,
                             double noise_power);

// total_power split evenly over `count` streams.
PowerAllocation equal_allocation(int count, double total_power, double noise_power);

// sum over streams of log2(1 + p_l * gain_l / noise).
double sum_rate(std::span<const double> gains, const PowerAllocation& allocation);

// log2 det(I + B^-1 W_r^H H W_t P W_t^H H^H W_r / noise) with B = W_r^H W_r.
// Equals sum_rate for an SVD transceiver. Throws when B is singular.
double mutual_info_rate(const ComplexMatrix& channel, const ComplexMatrix& precoder,
                        const ComplexMatrix& combiner, const PowerAllocation& allocation);

// z = W_r^H (H W_t P^{1/2} s + n), with n i.i.d. CN(0, noise).
ComplexVector transmit(const ComplexVector& symbols, const ComplexMatrix& channel,
                       const ComplexMatrix& precoder, const ComplexMatrix& combiner,
                       const PowerAllocation& allocation, Rng& rng);

// Large-array rate: sum over virtual paths of log2(1 + p_l |gain_l|^2 / noise).
// The allocation must cover every path of the decomposition.
double asymptotic_rate(const PathDecomposition& decomposition,
                       const PowerAllocation& allocation);

// Equal-power rate over the subsurface paths in the pure-LOS regime:
// sum_k log2(1 + P*n_r*n_t*n^2 / (K * g1g2_k * noise)).
double epa_rate(double total_power, std::span<const double> gain_products, int tx_count,
                int rx_count, int elements, double noise_power);

// K*log2(1 + P*n_r*n_t*n^2 / (noise * sum_k g1g2_k)); never exceeds epa_rate,
// with equality when all products are equal.
double rate_lower_bound(int subsurfaces, double total_power, double gain_product_sum,
                        int tx_count, int rx_count, int elements, double noise_power);

// Mean shift of the attenuation caused by shadowing, in dB.
double shadowing_mean_db(double sigma_db, ShadowingMeanMode mode);

// Mean of the cascaded two-leg attenuation product, linear scale.
double mean_gain_product(const PathLossParams& leg1, const PathLossParams& leg2,
                         ShadowingMeanMode mode);

// Average transmit power that sustains target_rate with equal power
// allocation: K * noise * gbar * (2^(R/K) - 1) / (n_r * n_t * n^2).
double min_power_epa(double target_rate, int subsurfaces, int elements, int tx_count,
                     int rx_count, double noise_power, double mean_gain_product_linear);

// Power that makes the equal-allocation lower bound hit target_rate for one
// realization of the per-subsurface attenuation products.
double instantaneous_power_for_rate(double target_rate, std::span<const double> gain_products,
                                    int tx_count, int rx_count, int elements,
                                    double noise_power);

struct SubsurfaceCount {
  double real_root = 0.0;  // K solving R = 3K(1 - 2^(-R/K))
  int recommended = 1;     // floor/ceil with the smaller equal-allocation power
};

// Subsurface count balancing multiplexing against per-path power gain when
// the total element budget K*N is fixed. Solved by bracketed bisection.
SubsurfaceCount optimal_subsurface_count(double target_rate);

// Total instantaneous power of the adaptive policy: each stream k gets
// noise * g1g2_k * snr_k / (n_r * n_t * n^2).
double apa_instantaneous_total(std::span<const double> snr_targets,
                               std::span<const double> gain_products, int tx_count,
                               int rx_count, int elements, double noise_power);

// Its average over shadowing: noise * gbar * sum_k snr_k / (n_r * n_t * n^2).
double apa_average_total(std::span<const double> snr_targets, double mean_gain_product_linear,
                         int tx_count, int rx_count, int elements, double noise_power);

}  // namespace irsmimo

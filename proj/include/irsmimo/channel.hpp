#pragma once

#include <optional>
#include <span>
#include <vector>

#include "irsmimo/irs.hpp"
#include "irsmimo/pathloss.hpp"
#include "irsmimo/scenario.hpp"
#include "irsmimo/steering.hpp"

namespace irsmimo {

// One hop of the link (transmitter->receiver, transmitter->subsurface, or
// subsurface->receiver). Keeps the matrix together with every random quantity
// it was assembled from, so cascaded path gains can be recomputed exactly.
struct SegmentChannel {
  ComplexMatrix matrix;  // rows = receive side, cols = transmit side
  RiceanMix mix;
  double attenuation_db = 0.0;
  double attenuation_linear = 1.0;  // g
  double los_arrival = 0.0;         // radians, receive side
  double los_departure = 0.0;       // radians, transmit side
  int path_count = 1;               // L, including the LOS path
  std::vector<Complex> scatter_gains;  // alpha^l for l = 2..L
  std::vector<double> scatter_arrivals;
  std::vector<double> scatter_departures;
  double spacing = 0.5;

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }

  // Angles of path l (1-based; path 1 is the LOS path).
  double arrival(int path) const;
  double departure(int path) const;

  // Amplitude weight of path l: sqrt(los_fraction) for the LOS path,
  // sqrt(nlos_fraction / L) * alpha^l for the scattered paths.
  Complex path_weight(int path) const;
};

// sqrt(rx*tx) * a_r(arrival) * a_t(departure)^H: rank-1 line-of-sight matrix.
ComplexMatrix los_component(int rx_count, int tx_count, double arrival, double departure,
                            double spacing = 0.5);

// sqrt(rx*tx/L) * sum over the L-1 scattered paths of alpha * a_r * a_t^H.
// Requires path_count >= 2 and exactly path_count - 1 gains and angle pairs.
ComplexMatrix scattered_component(int rx_count, int tx_count, int path_count,
                                  std::span<const Complex> gains,
                                  std::span<const double> arrivals,
                                  std::span<const double> departures, double spacing = 0.5);

// sqrt(los_fraction/g)*los + sqrt(nlos_fraction/g)*scattered.
ComplexMatrix build_segment(const RiceanMix& mix, double attenuation_linear,
                            const ComplexMatrix& los_part, const ComplexMatrix& scattered_part);

// Draws one segment: path loss, LOS angle pair, then per scattered path a
// complex gain and an angle pair. The draw sequence is scalar-only and
// independent of the array sizes, so a fixed trial seed yields identical
// fading across array-size sweeps.
SegmentChannel sample_segment(int rx_count, int tx_count, const RiceanMix& mix,
                              const PathLossParams& pathloss, int path_count, double spacing,
                              Rng& rng);

// One draw of every random quantity in the link: the direct segment (when
// enabled) followed by the tx->surface and surface->rx segments of each
// subsurface, in that fixed order.
struct ChannelRealization {
  int tx_count = 0;
  int rx_count = 0;
  int elements_per_subsurface = 0;
  double spacing = 0.5;
  std::optional<SegmentChannel> direct;       // rx x tx
  std::vector<SegmentChannel> tx_to_surface;  // K entries, N x tx
  std::vector<SegmentChannel> surface_to_rx;  // K entries, rx x N

  int subsurface_count() const { return static_cast<int>(tx_to_surface.size()); }
};

ChannelRealization sample_link_realization(const ScenarioConfig& config, Rng& rng);

// Overall channel: sum over subsurfaces of H_sr * V_k * H_ts, plus the direct
// matrix. Profiles must match the subsurface count and element count.
ComplexMatrix aggregate_channel(const ChannelRealization& realization,
                                const std::vector<PhaseProfile>& profiles);

// One rank-1 virtual path of the aggregate channel.
struct VirtualPath {
  Complex gain;
  double arrival = 0.0;    // receive-side angle
  double departure = 0.0;  // transmit-side angle
};

struct PathDecomposition {
  // nu_l for l = 1..L (empty without a direct link).
  std::vector<Complex> direct_gains;
  // Per subsurface, the L2 x L1 matrix of cascaded gains theta_ij.
  std::vector<ComplexMatrix> surface_gains;
  // All paths merged and sorted by descending |gain|.
  std::vector<VirtualPath> paths;

  int total_paths() const { return static_cast<int>(paths.size()); }
  std::vector<double> power_gains() const;  // |gain|^2 in sorted order
};

PathDecomposition path_decomposition(const ChannelRealization& realization,
                                     const std::vector<PhaseProfile>& profiles);

// Rebuilds the aggregate channel from its virtual paths: sum of
// gain * a_r(arrival) * a_t(departure)^H. Equals aggregate_channel exactly.
ComplexMatrix reconstruct_from_paths(const PathDecomposition& decomposition, int rx_count,
                                     int tx_count, double spacing = 0.5);

}  // namespace irsmimo

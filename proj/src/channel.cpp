#include "irsmimo/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace irsmimo {

double SegmentChannel::arrival(int path) const {
  if (path < 1 || path > path_count) throw std::out_of_range("segment path index");
  return path == 1 ? los_arrival : scatter_arrivals[path - 2];
}

double SegmentChannel::departure(int path) const {
  if (path < 1 || path > path_count) throw std::out_of_range("segment path index");
  return path == 1 ? los_departure : scatter_departures[path - 2];
}

Complex SegmentChannel::path_weight(int path) const {
  if (path < 1 || path > path_count) throw std::out_of_range("segment path index");
  if (path == 1) return std::sqrt(mix.los_fraction());
  return std::sqrt(mix.nlos_fraction() / path_count) * scatter_gains[path - 2];
}

ComplexMatrix los_component(int rx_count, int tx_count, double arrival, double departure,
                            double spacing) {
  if (rx_count < 1 || tx_count < 1) {
    throw std::invalid_argument("los_component: dimensions must be positive");
  }
  const SteeringVector rx = array_response(rx_count, arrival, spacing);
  const SteeringVector tx = array_response(tx_count, departure, spacing);
  const double scale = std::sqrt(static_cast<double>(rx_count) * tx_count);
  return scale * (rx.entries * tx.entries.adjoint());
}

ComplexMatrix scattered_component(int rx_count, int tx_count, int path_count,
                                  std::span<const Complex> gains,
                                  std::span<const double> arrivals,
                                  std::span<const double> departures, double spacing) {
  if (rx_count < 1 || tx_count < 1) {
    throw std::invalid_argument("scattered_component: dimensions must be positive");
  }
  if (path_count < 2) {
    throw std::invalid_argument("scattered_component: no scattered paths (need L >= 2)");
  }
  const std::size_t scattered = static_cast<std::size_t>(path_count) - 1;
  if (gains.size() != scattered || arrivals.size() != scattered ||
      departures.size() != scattered) {
    throw std::invalid_argument("scattered_component: need exactly L-1 gains and angle pairs");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(rx_count, tx_count);
  for (std::size_t l = 0; l < scattered; ++l) {
    const SteeringVector rx = array_response(rx_count, arrivals[l], spacing);
    const SteeringVector tx = array_response(tx_count, departures[l], spacing);
    sum.noalias() += gains[l] * (rx.entries * tx.entries.adjoint());
  }
  const double scale = std::sqrt(static_cast<double>(rx_count) * tx_count / path_count);
  return scale * sum;
}

ComplexMatrix build_segment(const RiceanMix& mix, double attenuation_linear,
                            const ComplexMatrix& los_part, const ComplexMatrix& scattered_part) {
  if (!(attenuation_linear > 0.0)) {
    throw std::invalid_argument("build_segment: attenuation must be positive");
  }
  if (los_part.rows() != scattered_part.rows() || los_part.cols() != scattered_part.cols()) {
    throw std::invalid_argument("build_segment: component dimensions differ");
  }
  return std::sqrt(mix.los_fraction() / attenuation_linear) * los_part +
         std::sqrt(mix.nlos_fraction() / attenuation_linear) * scattered_part;
}

SegmentChannel sample_segment(int rx_count, int tx_count, const RiceanMix& mix,
                              const PathLossParams& pathloss, int path_count, double spacing,
                              Rng& rng) {
  if (path_count < 1) {
    throw std::invalid_argument("sample_segment: need at least the LOS path");
  }
  SegmentChannel segment;
  segment.mix = mix;
  segment.path_count = path_count;
  segment.spacing = spacing;

  // Fixed scalar draw order: path loss, LOS angles, then per scattered path
  // a complex gain and an angle pair.
  const PathLossSample attenuation = sample_pathloss(pathloss, rng);
  segment.attenuation_db = attenuation.attenuation_db;
  segment.attenuation_linear = attenuation.attenuation_linear;
  segment.los_arrival = rng.azimuth();
  segment.los_departure = rng.azimuth();
  for (int l = 2; l <= path_count; ++l) {
    segment.scatter_gains.push_back(rng.complex_normal());
    segment.scatter_arrivals.push_back(rng.azimuth());
    segment.scatter_departures.push_back(rng.azimuth());
  }

  const ComplexMatrix los =
      los_component(rx_count, tx_count, segment.los_arrival, segment.los_departure, spacing);
  const ComplexMatrix scattered =
      path_count >= 2
          ? scattered_component(rx_count, tx_count, path_count, segment.scatter_gains,
                                segment.scatter_arrivals, segment.scatter_departures, spacing)
          : ComplexMatrix::Zero(rx_count, tx_count);
  segment.matrix = build_segment(mix, segment.attenuation_linear, los, scattered);
  return segment;
}

ChannelRealization sample_link_realization(const ScenarioConfig& config, Rng& rng) {
  config.validate();
  ChannelRealization realization;
  realization.tx_count = config.tx_count;
  realization.rx_count = config.rx_count;
  realization.elements_per_subsurface = config.elements;
  realization.spacing = config.spacing;

  if (config.include_direct) {
    realization.direct =
        sample_segment(config.rx_count, config.tx_count, config.direct_mix(),
                       config.direct_pathloss(), config.direct_paths, config.spacing, rng);
  }
  const RiceanMix leg1_mix = config.tx_surface_mix();
  const RiceanMix leg2_mix = config.surface_rx_mix();
  const PathLossParams leg1 = config.leg1_pathloss();
  const PathLossParams leg2 = config.leg2_pathloss();
  for (int k = 0; k < config.subsurfaces; ++k) {
    realization.tx_to_surface.push_back(sample_segment(
        config.elements, config.tx_count, leg1_mix, leg1, config.tx_surface_paths,
        config.spacing, rng));
    realization.surface_to_rx.push_back(sample_segment(
        config.rx_count, config.elements, leg2_mix, leg2, config.surface_rx_paths,
        config.spacing, rng));
  }
  return realization;
}

namespace {

void check_profiles(const ChannelRealization& realization,
                    const std::vector<PhaseProfile>& profiles) {
  if (static_cast<int>(profiles.size()) != realization.subsurface_count()) {
    throw std::invalid_argument("expected one phase profile per subsurface");
  }
  for (const PhaseProfile& profile : profiles) {
    if (profile.size() != realization.elements_per_subsurface) {
      throw std::invalid_argument("phase profile length differs from element count");
    }
  }
}

}  // namespace

ComplexMatrix aggregate_channel(const ChannelRealization& realization,
                                const std::vector<PhaseProfile>& profiles) {
  check_profiles(realization, profiles);
  ComplexMatrix overall = realization.direct
                              ? realization.direct->matrix
                              : ComplexMatrix::Zero(realization.rx_count, realization.tx_count);
  for (int k = 0; k < realization.subsurface_count(); ++k) {
    const ComplexVector diagonal = reflection_diagonal(profiles[k]);
    const ComplexMatrix reflected =
        realization.surface_to_rx[k].matrix * diagonal.asDiagonal();
    overall.noalias() += reflected * realization.tx_to_surface[k].matrix;
  }
  return overall;
}

std::vector<double> PathDecomposition::power_gains() const {
  std::vector<double> gains;
  gains.reserve(paths.size());
  for (const VirtualPath& path : paths) gains.push_back(std::norm(path.gain));
  return gains;
}

PathDecomposition path_decomposition(const ChannelRealization& realization,
                                     const std::vector<PhaseProfile>& profiles) {
  check_profiles(realization, profiles);
  PathDecomposition decomposition;

  if (realization.direct) {
    const SegmentChannel& direct = *realization.direct;
    const double scale = std::sqrt(static_cast<double>(realization.rx_count) *
                                   realization.tx_count / direct.attenuation_linear);
    for (int l = 1; l <= direct.path_count; ++l) {
      const Complex gain = scale * direct.path_weight(l);
      decomposition.direct_gains.push_back(gain);
      decomposition.paths.push_back({gain, direct.arrival(l), direct.departure(l)});
    }
  }

  const double elements = realization.elements_per_subsurface;
  for (int k = 0; k < realization.subsurface_count(); ++k) {
    const SegmentChannel& to_surface = realization.tx_to_surface[k];
    const SegmentChannel& from_surface = realization.surface_to_rx[k];
    const double scale =
        std::sqrt(static_cast<double>(realization.tx_count) * realization.rx_count * elements *
                  elements / (to_surface.attenuation_linear * from_surface.attenuation_linear));
    ComplexMatrix gains(from_surface.path_count, to_surface.path_count);
    for (int i = 1; i <= from_surface.path_count; ++i) {
      for (int j = 1; j <= to_surface.path_count; ++j) {
        const Complex couple = coupling(from_surface.departure(i), profiles[k],
                                        to_surface.arrival(j), realization.spacing);
        const Complex gain = scale * couple * to_surface.path_weight(j) *
                             from_surface.path_weight(i);
        gains(i - 1, j - 1) = gain;
        decomposition.paths.push_back(
            {gain, from_surface.arrival(i), to_surface.departure(j)});
      }
    }
    decomposition.surface_gains.push_back(std::move(gains));
  }

  std::stable_sort(decomposition.paths.begin(), decomposition.paths.end(),
                   [](const VirtualPath& a, const VirtualPath& b) {
                     return std::abs(a.gain) > std::abs(b.gain);
                   });
  return decomposition;
}

ComplexMatrix reconstruct_from_paths(const PathDecomposition& decomposition, int rx_count,
                                     int tx_count, double spacing) {
  ComplexMatrix overall = ComplexMatrix::Zero(rx_count, tx_count);
  for (const VirtualPath& path : decomposition.paths) {
    const SteeringVector rx = array_response(rx_count, path.arrival, spacing);
    const SteeringVector tx = array_response(tx_count, path.departure, spacing);
    overall.noalias() += path.gain * (rx.entries * tx.entries.adjoint());
  }
  return overall;
}

}  // namespace irsmimo

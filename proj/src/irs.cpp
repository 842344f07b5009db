#include "irsmimo/irs.hpp"

#include <stdexcept>

#include "irsmimo/channel.hpp"
#include "irsmimo/steering.hpp"

namespace irsmimo {

namespace {

double wrap_phase(double phase) {
  double wrapped = std::fmod(phase, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  return wrapped;
}

void check_amplitude(double amplitude) {
  if (!(amplitude > 0.0) || amplitude > 1.0) {
    throw std::invalid_argument("reflection amplitude must lie in (0, 1]");
  }
}

}  // namespace

PhaseProfile make_profile(std::vector<double> phases, double amplitude) {
  check_amplitude(amplitude);
  for (double& phase : phases) phase = wrap_phase(phase);
  PhaseProfile profile;
  profile.phases = std::move(phases);
  profile.amplitude = amplitude;
  return profile;
}

ComplexVector reflection_diagonal(const PhaseProfile& profile) {
  check_amplitude(profile.amplitude);
  ComplexVector diagonal(profile.size());
  for (int n = 0; n < profile.size(); ++n) {
    diagonal[n] = std::polar(profile.amplitude, -profile.phases[n]);
  }
  return diagonal;
}

ComplexMatrix reflection_matrix(const PhaseProfile& profile) {
  return ComplexMatrix(reflection_diagonal(profile).asDiagonal());
}

Complex coupling(double departure, const PhaseProfile& profile, double incident,
                 double spacing) {
  const SteeringVector out = array_response(profile.size(), departure, spacing);
  const SteeringVector in = array_response(profile.size(), incident, spacing);
  return out.entries.dot(reflection_diagonal(profile).cwiseProduct(in.entries));
}

PhaseProfile optimal_phases(double incident, double departure, int element_count,
                            double amplitude) {
  return linear_profile(std::sin(incident) - std::sin(departure), element_count, amplitude);
}

PhaseProfile linear_profile(double slope, int element_count, double amplitude) {
  if (element_count < 1) {
    throw std::invalid_argument("linear_profile: element count must be positive");
  }
  std::vector<double> phases(element_count);
  for (int n = 0; n < element_count; ++n) {
    phases[n] = wrap_phase(kPi * n * slope);
  }
  PhaseProfile profile = make_profile(std::move(phases), amplitude);
  profile.slope = slope;
  return profile;
}

PathSelection select_strongest_path(const ChannelRealization& realization, int subsurface) {
  if (subsurface < 0 || subsurface >= realization.subsurface_count()) {
    throw std::out_of_range("select_strongest_path: no such subsurface");
  }
  const SegmentChannel& to_surface = realization.tx_to_surface[subsurface];
  const SegmentChannel& from_surface = realization.surface_to_rx[subsurface];

  const double scale = static_cast<double>(realization.tx_count) * realization.rx_count *
                       realization.elements_per_subsurface *
                       realization.elements_per_subsurface /
                       (to_surface.attenuation_linear * from_surface.attenuation_linear);

  PathSelection best;
  best.subsurface = subsurface;
  double best_metric = -1.0;
  for (int i = 1; i <= from_surface.path_count; ++i) {
    const double rx_weight = std::norm(from_surface.path_weight(i));
    for (int j = 1; j <= to_surface.path_count; ++j) {
      const double metric = scale * rx_weight * std::norm(to_surface.path_weight(j));
      if (metric > best_metric) {
        best_metric = metric;
        best.surface_to_rx_path = i;
        best.tx_to_surface_path = j;
      }
    }
  }
  best.metric = best_metric;
  best.slope = std::sin(to_surface.arrival(best.tx_to_surface_path)) -
               std::sin(from_surface.departure(best.surface_to_rx_path));
  return best;
}

}  // namespace irsmimo

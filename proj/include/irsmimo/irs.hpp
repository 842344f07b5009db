#pragma once

#include <optional>
#include <vector>

#include "irsmimo/types.hpp"

namespace irsmimo {

struct ChannelRealization;

// Reflection state of one subsurface: per-element phase shifts (stored
// canonically in [0, 2*pi)), a common amplitude coefficient in (0, 1], and,
// for linear profiles, the sine-difference slope that generated the phases.
struct PhaseProfile {
  std::vector<double> phases;
  double amplitude = 1.0;
  std::optional<double> slope;

  int size() const { return static_cast<int>(phases.size()); }
};

// Builds a profile from raw phases, reducing each into [0, 2*pi).
PhaseProfile make_profile(std::vector<double> phases, double amplitude = 1.0);

// Diagonal of the reflection matrix: amplitude * e^{-j v_n}.
ComplexVector reflection_diagonal(const PhaseProfile& profile);

// Dense N x N diagonal reflection matrix; unitary when the amplitude is 1.
ComplexMatrix reflection_matrix(const PhaseProfile& profile);

// xi = a(departure)^H V a(incident) for an N-element subsurface: how well the
// profile couples an incident steering direction into a departing one. For a
// linear profile of slope delta the magnitude follows the Dirichlet kernel in
// sin(incident) - sin(departure) - delta.
Complex coupling(double departure, const PhaseProfile& profile, double incident,
                 double spacing = 0.5);

// v_n = pi*(n-1)*(sin(incident) - sin(departure)): aligns the subsurface for
// the given pair of angles, making the coupling magnitude exactly 1.
PhaseProfile optimal_phases(double incident, double departure, int element_count,
                            double amplitude = 1.0);

// v_n = pi*(n-1)*slope, reduced mod 2*pi.
PhaseProfile linear_profile(double slope, int element_count, double amplitude = 1.0);

struct PathSelection {
  int subsurface = 0;
  int surface_to_rx_path = 1;  // i0, 1-based; path 1 is the LOS path
  int tx_to_surface_path = 1;  // j0, 1-based
  double metric = 0.0;         // omega(i0, j0), linear power
  double slope = 0.0;          // sin of incident angle j0 minus sin of departure angle i0
};

// Strongest propagation path pair (i, j) of subsurface k. The metric is the
// coupling-independent part of the cascaded path power, so it never divides
// by a near-zero coupling; ties resolve to the smallest (i, j).
PathSelection select_strongest_path(const ChannelRealization& realization, int subsurface);

}  // namespace irsmimo

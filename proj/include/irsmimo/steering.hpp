#pragma once

#include "irsmimo/types.hpp"

namespace irsmimo {

// Response of an M-element uniform linear array at a given azimuth. Entry n
// is exp(j*2*pi*(n-1)*spacing*sin(angle)) / sqrt(M), so the vector has unit
// Euclidean norm. `spacing` is the inter-element distance over the carrier
// wavelength (half-wavelength by default).
struct SteeringVector {
  ComplexVector entries;
  double angle = 0.0;
  double spacing = 0.5;

  int size() const { return static_cast<int>(entries.size()); }
};

SteeringVector array_response(int element_count, double angle, double spacing = 0.5);

// v1^H * v2; throws std::invalid_argument on length mismatch.
Complex steering_inner_product(const SteeringVector& v1, const SteeringVector& v2);

// |sin(M*pi*spacing*delta) / (M*sin(pi*spacing*delta))| with delta the
// difference of the two angle sines: closed form for the magnitude of the
// inner product of two M-element array responses.
double dirichlet_magnitude(int element_count, double spacing, double sine_delta);

}  // namespace irsmimo

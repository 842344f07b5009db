#include "irsmimo/steering.hpp"

#include <stdexcept>

namespace irsmimo {

SteeringVector array_response(int element_count, double angle, double spacing) {
  if (element_count < 1) {
    throw std::invalid_argument("array_response: element count must be positive");
  }
  SteeringVector response;
  response.angle = angle;
  response.spacing = spacing;
  response.entries.resize(element_count);
  const double step = kTwoPi * spacing * std::sin(angle);
  const double scale = 1.0 / std::sqrt(static_cast<double>(element_count));
  for (int n = 0; n < element_count; ++n) {
    response.entries[n] = std::polar(scale, step * n);
  }
  return response;
}

Complex steering_inner_product(const SteeringVector& v1, const SteeringVector& v2) {
  if (v1.size() != v2.size()) {
    throw std::invalid_argument("steering_inner_product: length mismatch");
  }
  return v1.entries.dot(v2.entries);  // Eigen's dot conjugates the left operand
}

double dirichlet_magnitude(int element_count, double spacing, double sine_delta) {
  const double x = kPi * spacing * sine_delta;
  const double denom = element_count * std::sin(x);
  if (std::abs(denom) < 1e-300) {
    return 1.0;  // aligned (or aliased) case: the sum has N equal terms
  }
  return std::abs(std::sin(element_count * x) / denom);
}

}  // namespace irsmimo

#include "irsmimo/transceiver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

namespace irsmimo {

Transceiver svd_transceiver(const ComplexMatrix& channel, int stream_count) {
  const int max_streams = static_cast<int>(std::min(channel.rows(), channel.cols()));
  if (stream_count < 1 || stream_count > max_streams) {
    throw std::invalid_argument("svd_transceiver: stream count out of range");
  }
  Eigen::BDCSVD<ComplexMatrix> svd(channel, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Transceiver transceiver;
  transceiver.combiner = svd.matrixU().leftCols(stream_count);
  transceiver.precoder = svd.matrixV().leftCols(stream_count);
  transceiver.singular_values = svd.singularValues().head(stream_count);
  return transceiver;
}

std::vector<double> usable_power_gains(const ComplexMatrix& channel, double relative_cutoff) {
  Eigen::BDCSVD<ComplexMatrix> svd(channel);
  const RealVector& values = svd.singularValues();
  std::vector<double> gains;
  if (values.size() == 0) return gains;
  const double cutoff = relative_cutoff * values[0];
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > cutoff && values[i] > 0.0) gains.push_back(values[i] * values[i]);
  }
  return gains;
}

int PowerAllocation::active_streams() const {
  return static_cast<int>(
      std::count_if(stream_powers.begin(), stream_powers.end(), [](double p) { return p > 0.0; }));
}

PowerAllocation waterfilling(std::span<const double> gains, double total_power,
                             double noise_power) {
  if (!(total_power > 0.0)) throw std::invalid_argument("waterfilling: power must be positive");
  if (!(noise_power > 0.0)) throw std::invalid_argument("waterfilling: noise must be positive");
  for (double gain : gains) {
    if (gain < 0.0) throw std::invalid_argument("waterfilling: gains must be nonnegative");
  }

  // Noise-to-gain levels of the usable streams, sorted ascending.
  std::vector<std::pair<double, std::size_t>> levels;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (gains[i] > 0.0) levels.emplace_back(noise_power / gains[i], i);
  }
  if (levels.empty()) throw std::invalid_argument("waterfilling: no usable stream");
  std::sort(levels.begin(), levels.end());

  // Largest active-set size whose closed-form water level clears its worst
  // stream; this is the exact optimum.
  std::vector<double> prefix(levels.size() + 1, 0.0);
  for (std::size_t i = 0; i < levels.size(); ++i) prefix[i + 1] = prefix[i] + levels[i].first;
  std::size_t active = 1;
  double water_level = total_power + prefix[1];
  for (std::size_t m = levels.size(); m >= 1; --m) {
    const double mu = (total_power + prefix[m]) / static_cast<double>(m);
    if (mu > levels[m - 1].first) {
      active = m;
      water_level = mu;
      break;
    }
  }

  PowerAllocation allocation;
  allocation.stream_powers.assign(gains.size(), 0.0);
  allocation.total_power = total_power;
  allocation.noise_power = noise_power;
  for (std::size_t i = 0; i < active; ++i) {
    allocation.stream_powers[levels[i].second] = water_level - levels[i].first;
  }
  return allocation;
}

PowerAllocation equal_allocation(int count, double total_power, double noise_power) {
  if (count < 1) throw std::invalid_argument("equal_allocation: need at least one stream");
  PowerAllocation allocation;
  allocation.stream_powers.assign(count, total_power / count);
  allocation.total_power = total_power;
  allocation.noise_power = noise_power;
  return allocation;
}

double sum_rate(std::span<const double> gains, const PowerAllocation& allocation) {
  if (gains.size() != allocation.stream_powers.size()) {
    throw std::invalid_argument("sum_rate: allocation does not match the gains");
  }
  double rate = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    rate += std::log2(1.0 + allocation.stream_powers[i] * gains[i] / allocation.noise_power);
  }
  return rate;
}

double mutual_info_rate(const ComplexMatrix& channel, const ComplexMatrix& precoder,
                        const ComplexMatrix& combiner, const PowerAllocation& allocation) {
  const Eigen::Index streams = precoder.cols();
  if (combiner.cols() != streams ||
      static_cast<Eigen::Index>(allocation.stream_powers.size()) != streams) {
    throw std::invalid_argument("mutual_info_rate: stream counts disagree");
  }
  if (channel.rows() != combiner.rows() || channel.cols() != precoder.rows()) {
    throw std::invalid_argument("mutual_info_rate: dimension mismatch");
  }
  const ComplexMatrix gram = combiner.adjoint() * combiner;  // B
  Eigen::LLT<ComplexMatrix> gram_llt(gram);
  if (gram_llt.info() != Eigen::Success) {
    throw std::invalid_argument("mutual_info_rate: singular combiner Gram matrix");
  }
  const ComplexMatrix effective = combiner.adjoint() * channel * precoder;
  Eigen::VectorXd powers =
      Eigen::Map<const Eigen::VectorXd>(allocation.stream_powers.data(), streams);
  const ComplexMatrix signal = effective * powers.asDiagonal() * effective.adjoint() /
                               allocation.noise_power;

  // log2 det(I + B^-1 S) = log2 det(B + S) - log2 det(B), both Hermitian PD.
  auto log2_det = [](const ComplexMatrix& matrix) {
    Eigen::LLT<ComplexMatrix> llt(matrix);
    if (llt.info() != Eigen::Success) {
      throw std::invalid_argument("mutual_info_rate: matrix not positive definite");
    }
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      log_det += 2.0 * std::log2(std::abs(llt.matrixLLT()(i, i)));
    }
    return log_det;
  };
  return log2_det(gram + signal) - log2_det(gram);
}

ComplexVector transmit(const ComplexVector& symbols, const ComplexMatrix& channel,
                       const ComplexMatrix& precoder, const ComplexMatrix& combiner,
                       const PowerAllocation& allocation, Rng& rng) {
  const Eigen::Index streams = precoder.cols();
  if (symbols.size() != streams ||
      static_cast<Eigen::Index>(allocation.stream_powers.size()) != streams) {
    throw std::invalid_argument("transmit: symbol count does not match the streams");
  }
  ComplexVector scaled(streams);
  for (Eigen::Index l = 0; l < streams; ++l) {
    scaled[l] = std::sqrt(allocation.stream_powers[l]) * symbols[l];
  }
  ComplexVector received = channel * (precoder * scaled);
  const double noise_scale = std::sqrt(allocation.noise_power);
  for (Eigen::Index i = 0; i < received.size(); ++i) {
    received[i] += noise_scale * rng.complex_normal();
  }
  return combiner.adjoint() * received;
}

double asymptotic_rate(const PathDecomposition& decomposition,
                       const PowerAllocation& allocation) {
  const std::vector<double> gains = decomposition.power_gains();
  if (gains.size() != allocation.stream_powers.size()) {
    throw std::invalid_argument("asymptotic_rate: allocation must cover every path");
  }
  return sum_rate(gains, allocation);
}

namespace {

double surface_power_gain(int tx_count, int rx_count, int elements) {
  return static_cast<double>(tx_count) * rx_count * static_cast<double>(elements) * elements;
}

}  // namespace

double epa_rate(double total_power, std::span<const double> gain_products, int tx_count,
                int rx_count, int elements, double noise_power) {
  if (gain_products.empty()) throw std::invalid_argument("epa_rate: need at least one subsurface");
  const double scale = surface_power_gain(tx_count, rx_count, elements);
  const double subsurfaces = static_cast<double>(gain_products.size());
  double rate = 0.0;
  for (double product : gain_products) {
    rate += std::log2(1.0 + total_power * scale / (subsurfaces * product * noise_power));
  }
  return rate;
}

double rate_lower_bound(int subsurfaces, double total_power, double gain_product_sum,
                        int tx_count, int rx_count, int elements, double noise_power) {
  if (subsurfaces < 1) throw std::invalid_argument("rate_lower_bound: need K >= 1");
  const double scale = surface_power_gain(tx_count, rx_count, elements);
  return subsurfaces *
         std::log2(1.0 + total_power * scale / (noise_power * gain_product_sum));
}

double shadowing_mean_db(double sigma_db, ShadowingMeanMode mode) {
  if (sigma_db < 0.0) throw std::invalid_argument("shadowing_mean_db: sigma must be >= 0");
  constexpr double kLog10Over20 = 0.11512925464970229;  // ln(10)/20
  switch (mode) {
    case ShadowingMeanMode::Paper:
      return kLog10Over20 * std::pow(10.0, sigma_db / 5.0);
    case ShadowingMeanMode::LognormalExact:
      return kLog10Over20 * sigma_db * sigma_db;
  }
  throw std::invalid_argument("shadowing_mean_db: unknown mode");
}

double mean_gain_product(const PathLossParams& leg1, const PathLossParams& leg2,
                         ShadowingMeanMode mode) {
  leg1.validate();
  leg2.validate();
  const double total_db = median_pathloss_db(leg1) + shadowing_mean_db(leg1.shadow_std_db, mode) +
                          median_pathloss_db(leg2) + shadowing_mean_db(leg2.shadow_std_db, mode);
  return db_to_linear(total_db);
}

double min_power_epa(double target_rate, int subsurfaces, int elements, int tx_count,
                     int rx_count, double noise_power, double mean_gain_product_linear) {
  if (subsurfaces < 1) throw std::invalid_argument("min_power_epa: need K >= 1");
  const double per_stream = std::exp2(target_rate / subsurfaces) - 1.0;
  return subsurfaces * noise_power * mean_gain_product_linear * per_stream /
         surface_power_gain(tx_count, rx_count, elements);
}

double instantaneous_power_for_rate(double target_rate, std::span<const double> gain_products,
                                    int tx_count, int rx_count, int elements,
                                    double noise_power) {
  if (gain_products.empty()) {
    throw std::invalid_argument("instantaneous_power_for_rate: need K >= 1");
  }
  for (double product : gain_products) {
    if (!(product > 0.0)) {
      throw std::invalid_argument("instantaneous_power_for_rate: gains must be positive");
    }
  }
  const double sum = std::accumulate(gain_products.begin(), gain_products.end(), 0.0);
  const double per_stream =
      std::exp2(target_rate / static_cast<double>(gain_products.size())) - 1.0;
  return noise_power * sum * per_stream / surface_power_gain(tx_count, rx_count, elements);
}

SubsurfaceCount optimal_subsurface_count(double target_rate) {
  if (!(target_rate > 0.0)) {
    throw std::invalid_argument("optimal_subsurface_count: rate must be positive");
  }
  // f is strictly increasing in K, negative at K = R/3 and positive at K = R.
  const auto residual = [target_rate](double k) {
    return 3.0 * k * (1.0 - std::exp2(-target_rate / k)) - target_rate;
  };
  double lo = target_rate / 3.0;
  double hi = target_rate;
  for (int iteration = 0; iteration < 200; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  SubsurfaceCount result;
  result.real_root = 0.5 * (lo + hi);

  // With the element budget M = K*N fixed, the equal-allocation power scales
  // as K^3 (2^(R/K) - 1); pick the cheaper neighbor.
  const auto power_scale = [target_rate](double k) {
    return k * k * k * (std::exp2(target_rate / k) - 1.0);
  };
  const int floor_k = std::max(1, static_cast<int>(std::floor(result.real_root)));
  const int ceil_k = static_cast<int>(std::ceil(result.real_root));
  result.recommended =
      power_scale(floor_k) <= power_scale(ceil_k) ? floor_k : ceil_k;
  return result;
}

double apa_instantaneous_total(std::span<const double> snr_targets,
                               std::span<const double> gain_products, int tx_count,
                               int rx_count, int elements, double noise_power) {
  if (snr_targets.size() != gain_products.size()) {
    throw std::invalid_argument("apa_instantaneous_total: need one product per target");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < snr_targets.size(); ++k) {
    if (snr_targets[k] < 0.0) {
      throw std::invalid_argument("apa_instantaneous_total: targets must be nonnegative");
    }
    total += gain_products[k] * snr_targets[k];
  }
  return noise_power * total / surface_power_gain(tx_count, rx_count, elements);
}

double apa_average_total(std::span<const double> snr_targets, double mean_gain_product_linear,
                         int tx_count, int rx_count, int elements, double noise_power) {
  double target_sum = 0.0;
  for (double target : snr_targets) {
    if (target < 0.0) {
      throw std::invalid_argument("apa_average_total: targets must be nonnegative");
    }
    target_sum += target;
  }
  return noise_power * mean_gain_product_linear * target_sum /
         surface_power_gain(tx_count, rx_count, elements);
}

}  // namespace irsmimo

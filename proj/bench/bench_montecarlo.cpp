// Times the serial reference runner against the OpenMP runner on the same
// scenario and checks that they produce identical trial records.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include <omp.h>

#include "irsmimo/montecarlo.hpp"

using namespace irsmimo;

int main(int argc, char** argv) {
  ScenarioConfig config;
  config.tx_count = 64;
  config.rx_count = 36;
  config.elements = 200;
  config.subsurfaces = 3;
  config.trials = 64;
  config.seed = 42;
  if (argc > 1) config.trials = std::atoi(argv[1]);

  std::printf("scenario: n_t=%d n_r=%d n=%d k=%d trials=%d\n", config.tx_count,
              config.rx_count, config.elements, config.subsurfaces, config.trials);

  double start = omp_get_wtime();
  const RateReport serial = run_monte_carlo(config, Execution::Serial);
  const double serial_time = omp_get_wtime() - start;
  std::printf("serial          %8.3f s  mean rate %.6f\n", serial_time, serial.exact.mean);

  for (int threads : {1, 2, 4, 8}) {
    start = omp_get_wtime();
    const RateReport parallel = run_monte_carlo(config, Execution::OpenMP, threads);
    const double parallel_time = omp_get_wtime() - start;

    bool identical = parallel.trials.size() == serial.trials.size();
    for (std::size_t t = 0; identical && t < serial.trials.size(); ++t) {
      identical = std::memcmp(&serial.trials[t], &parallel.trials[t], sizeof(TrialRecord)) == 0;
    }
    std::printf("openmp x%-2d      %8.3f s  speedup %5.2f  records %s\n", threads,
                parallel_time, serial_time / parallel_time,
                identical ? "identical" : "DIFFER");
    if (!identical) return 1;
  }
  return 0;
}

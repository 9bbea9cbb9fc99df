// Benchmark: serial reference sweep vs the OpenMP kernel over the same
// range, verifying record-for-record equality before reporting
// throughput.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "ntkit/sweep.hpp"

using h_clock = std::chrono::high_resolution_clock;

int main(int argc, char** argv) {
  uint64_t from = 16, to = 20000;
  if (argc >= 2) from = std::strtoull(argv[1], nullptr, 10);
  if (argc >= 3) to = std::strtoull(argv[2], nullptr, 10);
  std::printf("sweep range [%llu, %llu], max threads %d\n",
              static_cast<unsigned long long>(from),
              static_cast<unsigned long long>(to), omp_get_max_threads());

  auto t0 = h_clock::now();
  const auto serial = ntkit::run_sweep_serial(from, to);
  auto t1 = h_clock::now();
  const double serial_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
          .count();
  std::printf("serial   %10.1f ms  (%.1f n/ms)\n", serial_ms, serial.size() / serial_ms);

  for (int jobs : {1, 2, 4}) {
    auto t2 = h_clock::now();
    const auto par = ntkit::run_sweep(from, to, jobs);
    auto t3 = h_clock::now();
    const double par_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t3 - t2)
            .count();
    bool same = par.size() == serial.size();
    for (std::size_t i = 0; same && i < par.size(); ++i) same = par[i] == serial[i];
    std::printf("omp x%-2d  %10.1f ms  (%.1f n/ms)  speedup %.2f  %s\n", jobs, par_ms,
                par.size() / par_ms, serial_ms / par_ms,
                same ? "records identical" : "MISMATCH");
    if (!same) return 1;
  }
  return 0;
}

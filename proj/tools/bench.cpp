// Compares the serial reference kernels against their OpenMP counterparts:
// Krawtchouk table construction and bound-report sweeps.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpb/delsarte.hpp"
#include "lpb/krawtchouk.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  unsigned long table_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 300;
  unsigned long sweep_n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 26;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    auto t0 = Clock::now();
    lpb::KrawtchoukTable serial = lpb::build_table_serial(table_n);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    lpb::KrawtchoukTable parallel = lpb::build_table(table_n);
    double parallel_ms = ms_since(t0);
    if (serial.at(table_n / 2, table_n / 3) != parallel.at(table_n / 2, table_n / 3)) {
      std::fprintf(stderr, "kernel outputs disagree\n");
      return 1;
    }
    char label[64];
    std::snprintf(label, sizeof(label), "krawtchouk table n=%lu", table_n);
    report(label, serial_ms, parallel_ms);
  }

  {
    std::vector<lpb::BoundQuery> queries;
    for (unsigned long n = sweep_n; n <= sweep_n + 4; ++n)
      for (unsigned long d = 1; 2 * d < n; ++d)
        queries.push_back({n, d, lpb::Mode::AlmostBalanced});
    auto t0 = Clock::now();
    auto serial = lpb::bound_table_serial(queries);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel = lpb::bound_table(queries);
    double parallel_ms = ms_since(t0);
    for (std::size_t i = 0; i < queries.size(); ++i)
      if (serial[i].lp_value != parallel[i].lp_value) {
        std::fprintf(stderr, "sweep outputs disagree\n");
        return 1;
      }
    char label[64];
    std::snprintf(label, sizeof(label), "bound sweep n=%lu..%lu", sweep_n, sweep_n + 4);
    report(label, serial_ms, parallel_ms);
  }
  return 0;
}

// Benchmark comparing the serial reference sweep against the OpenMP kernel
// on the standard nilpotent-implies-trivial enumeration.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilgood/zlattice.hpp"

using nilgood::SweepReport;
using nilgood::SweepSpec;

namespace {

double time_ms(SweepReport (*kernel)(const SweepSpec&), const SweepSpec& spec,
               SweepReport& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = kernel(spec);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_rank = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled (parallel kernel falls back to serial)\n");
#endif
  std::printf("%-6s %12s %12s %10s %10s %8s\n", "rank", "candidates", "reps",
              "serial", "parallel", "speedup");
  for (int rank = 1; rank <= max_rank; ++rank) {
    SweepSpec spec{rank, 2, 6};
    SweepReport serial_report, parallel_report;
    double ts = time_ms(nilgood::sweep_serial, spec, serial_report);
    double tp = time_ms(nilgood::sweep_parallel, spec, parallel_report);
    bool match = serial_report.representations == parallel_report.representations &&
                 serial_report.nilpotent == parallel_report.nilpotent &&
                 serial_report.counterexamples == parallel_report.counterexamples;
    std::printf("%-6d %12lld %12lld %8.1fms %8.1fms %7.2fx %s\n", rank,
                serial_report.candidates, serial_report.representations, ts, tp,
                tp > 0 ? ts / tp : 0.0, match ? "" : "MISMATCH");
    if (!match) return 1;
  }
  return 0;
}

// Benchmark: serial all-sources sweep vs the OpenMP sweep vs the pruned
// bound-sweep, on the commuting graph for a chosen m.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "commgraph/graph.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int m = 12;
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "-m" && i + 1 < argc) {
      m = std::atoi(argv[++i]);
    } else if (arg == "--threads" && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [-m M] [--threads N]\n", argv[0]);
      return 2;
    }
  }

#ifdef _OPENMP
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
  const int nthreads = 1;
#endif

  std::printf("m = %d, threads = %d\n", m, nthreads);

  const cg::GroupParams params(m);
  auto t0 = Clock::now();
  const cg::CommutingGraph graph(params);
  std::printf("build:       %8.3f s  (%u vertices, %llu edges, cached=%d)\n",
              seconds_since(t0), graph.vertex_count(),
              static_cast<unsigned long long>(graph.edge_count()),
              int(graph.adjacency_cached()));

  t0 = Clock::now();
  const cg::DiameterReport serial = graph.diameter(cg::DiameterAlgo::kExactAllSources, 1);
  const double t_serial = seconds_since(t0);
  std::printf("serial:      %8.3f s  diameter %d radius %d\n", t_serial, serial.diameter,
              serial.radius);

  t0 = Clock::now();
  const cg::DiameterReport parallel =
      graph.diameter(cg::DiameterAlgo::kExactAllSources, threads);
  const double t_parallel = seconds_since(t0);
  std::printf("parallel:    %8.3f s  diameter %d radius %d  speedup %.2fx\n", t_parallel,
              parallel.diameter, parallel.radius, t_serial / t_parallel);

  t0 = Clock::now();
  const cg::DiameterReport pruned = graph.diameter(cg::DiameterAlgo::kPruned, threads);
  const double t_pruned = seconds_since(t0);
  std::printf("pruned:      %8.3f s  diameter %d radius %d  speedup %.2fx\n", t_pruned,
              pruned.diameter, pruned.radius, t_serial / t_pruned);

  if (serial.diameter != parallel.diameter || serial.diameter != pruned.diameter ||
      serial.radius != parallel.radius || serial.radius != pruned.radius) {
    std::printf("MISMATCH between engines\n");
    return 1;
  }
  std::printf("all engines agree\n");
  return 0;
}

// Times the check kernels in serial and OpenMP-parallel mode on identical
// workloads and reports the speedup. The two modes share every kernel and
// differ only in the scheduling of sample indices, so the results double as
// a determinism spot check: pass/fail totals must agree exactly.
#include "pathrw/checks.hpp"

#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pathrw;

namespace {

struct Workload {
  const char* suite;
  int samples;
};

double run_mode(const Workload& w, RunMode mode, int reps, bool& agree) {
  double best = 1e9;
  for (int r = 0; r < reps; ++r) {
    CheckOptions opt;
    opt.samples = w.samples;
    opt.seed = 1;
    opt.mode = mode;
    CheckResult res = run_check(w.suite, opt);
    if (!res.passed()) agree = false;
    if (res.seconds < best) best = res.seconds;
  }
  return best;
}

} // namespace

int main(int argc, char** argv) {
  int scale = 1;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--heavy") == 0) scale = 5;

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in (parallel mode degrades to serial)\n");
#endif

  Workload loads[] = {
      {"confluence", 10000 * scale},
      {"groupoid", 2000 * scale},
      {"rho", 2000 * scale},
      {"circle", 2000 * scale},
  };

  std::printf("%-12s %10s %10s %10s %8s\n", "suite", "samples", "serial",
              "parallel", "speedup");
  const int reps = 3;
  for (const Workload& w : loads) {
    bool ok = true;
    double ts = run_mode(w, RunMode::Serial, reps, ok);
    double tp = run_mode(w, RunMode::Parallel, reps, ok);
    std::printf("%-12s %10d %9.3fs %9.3fs %7.2fx%s\n", w.suite, w.samples, ts,
                tp, ts / (tp > 0 ? tp : 1e-9), ok ? "" : "  [FAILURES]");
  }
  return 0;
}

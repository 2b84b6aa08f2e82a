#include "gridsched/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gridsched {

namespace {

int g_cap = 0;

int env_cap() {
  static const int cached = [] {
    const char* s = std::getenv("GRIDSCHED_THREADS");
    if (s == nullptr) return 0;
    const int v = std::atoi(s);
    return v > 0 ? v : 0;
  }();
  return cached;
}

}  // namespace

void set_thread_cap(int n) { g_cap = n > 0 ? n : 0; }

int effective_threads() {
  if (g_cap > 0) return g_cap;
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (env_cap() > 0 && env_cap() < n) n = env_cap();
  return n < 1 ? 1 : n;
}

}  // namespace gridsched

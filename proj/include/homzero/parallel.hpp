#pragma once

#include <cstddef>

#if defined(HOMZERO_HAVE_OPENMP)
#include <omp.h>
#endif

namespace homzero {

// Selects between the serial reference loops and their OpenMP counterparts.
// Both produce bit-identical results: every parallel loop only touches
// independent rows or columns.
enum class Execution { serial, parallel };

inline constexpr bool parallel_available() {
#if defined(HOMZERO_HAVE_OPENMP)
  return true;
#else
  return false;
#endif
}

inline int max_threads() {
#if defined(HOMZERO_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Below this many iterations the fork/join overhead dominates.
inline constexpr std::ptrdiff_t kParallelGrain = 64;

template <typename F>
void for_each_index(Execution exec, std::ptrdiff_t n, F&& f) {
#if defined(HOMZERO_HAVE_OPENMP)
  if (exec == Execution::parallel && n >= kParallelGrain) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

}  // namespace homzero

#pragma once

// Thin wrapper over OpenMP so callers compile with or without it.

#include <cstddef>
#include <cstdint>

#if defined(JFA_HAVE_OPENMP)
#include <omp.h>
#endif

namespace jfa::parallel {

inline int max_threads() noexcept {
#if defined(JFA_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) noexcept {
#if defined(JFA_HAVE_OPENMP)
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Calls body(i) for i in [0, n). Iterations must be independent; any shared
// output has to be indexed by i so results stay deterministic.
template <typename Body>
void for_each_index(std::int64_t n, Body&& body) {
#if defined(JFA_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) body(i);
#else
  for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace jfa::parallel

// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#include "threelines/parallel.hpp"

#include <cstdlib>
#include <string>

namespace threelines::parallel {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_thread_cap(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int apply_env_thread_cap() {
  const char* env = std::getenv("THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    const int n = std::stoi(env);
    if (n > 0) {
      set_thread_cap(n);
      return n;
    }
  } catch (const std::exception&) {
    // unparsable values are ignored
  }
  return 0;
}

}  // namespace threelines::parallel

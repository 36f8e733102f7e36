// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Data-parallel index loops. Each OpenMP kernel has a serial twin with the
// same signature; tests compare the two bit for bit, and the benchmark
// target times them against each other. Results are written by index, so
// output order never depends on scheduling.

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace threelines::parallel {

/// Threads OpenMP regions will use.
int max_threads();

/// Caps OpenMP parallelism; n <= 0 leaves the runtime default.
void set_thread_cap(int n);

/// Applies the optional THREADS environment variable. Returns the cap, or 0 if unset.
int apply_env_thread_cap();

namespace detail {

inline void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail

template <class T, class F>
std::vector<T> map_indices_serial(std::size_t n, F&& fn) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

/// out[i] = fn(i), in parallel. The exception of the lowest failing index
/// is rethrown after the loop, matching what the serial twin would throw.
template <class T, class F>
std::vector<T> map_indices(std::size_t n, F&& fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);
  return out;
}

}  // namespace threelines::parallel

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace secmon {

/// Runs body(i) for i in [0, n) across OpenMP threads. If any call throws, the
/// exception from the lowest index is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace secmon

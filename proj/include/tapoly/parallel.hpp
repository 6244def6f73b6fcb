#pragma once

#include <cstddef>

namespace tapoly {

// Worker count for the OpenMP kernels: TAPOLY_THREADS when set (>= 1),
// otherwise the machine parallelism. Always 1 in builds without OpenMP.
int thread_count();

namespace detail {
void parallel_for_impl(std::size_t count, void (*body)(std::size_t, void*), void* ctx,
                       bool parallel);
}

// Runs body(0) .. body(count-1); iterations must be independent. Results must
// be written to per-index slots so that serial and parallel runs are
// bit-identical. `parallel = false` is the serial reference path.
template <typename F>
void parallel_for(std::size_t count, F&& body, bool parallel = true) {
    auto thunk = [](std::size_t i, void* ctx) { (*static_cast<F*>(ctx))(i); };
    detail::parallel_for_impl(count, thunk, &body, parallel);
}

}  // namespace tapoly

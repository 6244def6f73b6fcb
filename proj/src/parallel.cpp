#include "tapoly/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tapoly {

int thread_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("TAPOLY_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {

void parallel_for_impl(std::size_t count, void (*body)(std::size_t, void*), void* ctx,
                       bool parallel) {
#ifdef _OPENMP
    if (parallel && count > 1 && thread_count() > 1) {
        // Exceptions cannot cross the omp region; re-throw the first one after.
        std::exception_ptr err;
        std::mutex err_mutex;
        const int threads = thread_count();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i), ctx);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i, ctx);
}

}  // namespace detail

}  // namespace tapoly

// Runtime switch for the OpenMP kernels. Parallel and serial paths compute
// identical exact results; the switch exists for the benchmark and tests.
#pragma once

namespace equigen {

bool parallel_enabled();
void set_parallel_enabled(bool on);
int parallel_hardware_threads();

namespace detail {

template <typename F>
void parallel_for(long n, F&& body) {
    if (parallel_enabled()) {
#if defined(EQUIGEN_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) body(i);
        return;
#endif
    }
    for (long i = 0; i < n; ++i) body(i);
}

}  // namespace detail

}  // namespace equigen

#include "equigen/parallel.hpp"

#include <atomic>

#if defined(EQUIGEN_HAVE_OPENMP)
#include <omp.h>
#endif

namespace equigen {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() {
#if defined(EQUIGEN_HAVE_OPENMP)
    return g_parallel.load(std::memory_order_relaxed);
#else
    return false;
#endif
}

void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

int parallel_hardware_threads() {
#if defined(EQUIGEN_HAVE_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace equigen

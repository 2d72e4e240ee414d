#include "residua/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace residua {

namespace {
int g_thread_cap = 0;
}

void set_thread_cap(int threads) {
    g_thread_cap = threads < 0 ? 0 : threads;
#ifdef _OPENMP
    if (g_thread_cap > 0) omp_set_num_threads(g_thread_cap);
#endif
}

int thread_cap() { return g_thread_cap; }

namespace detail {

bool parallel_enabled(Exec exec) {
#ifdef _OPENMP
    return exec == Exec::Parallel && g_thread_cap != 1;
#else
    (void)exec;
    return false;
#endif
}

} // namespace detail

} // namespace residua

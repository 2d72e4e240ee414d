#ifndef RESIDUA_PARALLEL_HPP
#define RESIDUA_PARALLEL_HPP

#include <cstddef>

namespace residua {

/// Kernel selection: Serial is the reference implementation, Parallel the
/// OpenMP one. Both produce identical results; tests compare them.
enum class Exec { Serial, Parallel };

/// Caps OpenMP worker threads for all Parallel kernels (0 = default).
void set_thread_cap(int threads);
int thread_cap();

namespace detail {
bool parallel_enabled(Exec exec);
}

/// Index-space loop. The Parallel flavor runs iterations concurrently; each
/// iteration must write only to its own slots.
template <class F>
void parallel_for(std::size_t count, Exec exec, F&& body) {
    if (detail::parallel_enabled(exec)) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) body(i);
    }
}

} // namespace residua

#endif

#include "toric/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace toric {

namespace {
std::atomic<int> g_jobs{1};
}

void set_jobs(int n)
{
    g_jobs.store(n < 1 ? 1 : n);
}

int jobs()
{
    return g_jobs.load();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn)
{
    int j = jobs();
    if (j <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(j)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

} // namespace toric

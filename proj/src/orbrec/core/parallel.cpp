#include "orbrec/core/parallel.hpp"

#include <atomic>
#include <cstdlib>

#include <omp.h>

namespace orbrec::par {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int threads() { return g_threads.load(); }

namespace detail {

int resolved_threads() {
    int n = g_threads.load();
    if (n == 0) {
        if (const char* env = std::getenv("ORBREC_THREADS")) n = std::atoi(env);
    }
    if (n <= 0) n = omp_get_max_threads();
    return n;
}

}  // namespace detail

}  // namespace orbrec::par

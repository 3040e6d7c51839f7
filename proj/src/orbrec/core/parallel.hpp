#pragma once

#include <cstdint>

namespace orbrec::par {

// Global worker count for all parallel kernels. 0 = use all hardware threads.
// Setting it to 1 selects the serial reference path everywhere; kernels that
// are pure per element produce bit-identical output in either mode.
void set_threads(int n);
int threads();

// Static-schedule parallel loop over [0, n). Deterministic work assignment
// for a fixed thread count.
template <typename F>
void parallel_for(std::int64_t n, F&& f);

template <typename F>
void serial_for(std::int64_t n, F&& f) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
}

}  // namespace orbrec::par

#include <omp.h>

namespace orbrec::par {

namespace detail {
int resolved_threads();
}

template <typename F>
void parallel_for(std::int64_t n, F&& f) {
    const int nt = detail::resolved_threads();
    if (nt <= 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t i = 0; i < n; ++i) f(i);
}

}  // namespace orbrec::par

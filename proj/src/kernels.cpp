#include "harris/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace harris::kernels {

int thread_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* cap = std::getenv("HARRIS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && v >= 1) n = std::min<long>(n, v);
    }
    return std::max(n, 1);
#else
    return 1;
#endif
}

namespace serial {

void matmul(const double* a, const double* b, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double* ci = c + i * n;
        std::fill(ci, ci + n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            const double* bk = b + k * n;
            for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
}

void matvec(const double* a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        const double* ai = a + i * n;
        for (std::size_t j = 0; j < n; ++j) acc += ai[j] * x[j];
        y[i] = acc;
    }
}

void vecmat(const double* x, const double* a, double* y, std::size_t n) {
    // Column-wise accumulation so a row-parallel version sums in the same order.
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += x[i] * a[i * n + j];
        y[j] = acc;
    }
}

} // namespace serial

namespace {
constexpr std::size_t kParallelCutoff = 32; // below this the fork costs more than the loop
}

void matmul(const double* a, const double* b, double* c, std::size_t n) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (n >= kParallelCutoff)
    for (std::int64_t i = 0; i < sn; ++i) {
        double* ci = c + i * sn;
        std::fill(ci, ci + sn, 0.0);
        for (std::int64_t k = 0; k < sn; ++k) {
            const double aik = a[i * sn + k];
            const double* bk = b + k * sn;
            for (std::int64_t j = 0; j < sn; ++j) ci[j] += aik * bk[j];
        }
    }
}

void matvec(const double* a, const double* x, double* y, std::size_t n) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (n >= kParallelCutoff)
    for (std::int64_t i = 0; i < sn; ++i) {
        double acc = 0.0;
        const double* ai = a + i * sn;
        for (std::int64_t j = 0; j < sn; ++j) acc += ai[j] * x[j];
        y[i] = acc;
    }
}

void vecmat(const double* x, const double* a, double* y, std::size_t n) {
    const std::int64_t sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (n >= kParallelCutoff)
    for (std::int64_t j = 0; j < sn; ++j) {
        double acc = 0.0;
        for (std::int64_t i = 0; i < sn; ++i) acc += x[i] * a[i * sn + j];
        y[j] = acc;
    }
}

} // namespace harris::kernels

// Times the OpenMP kernels against the serial references on synthetic
// row-stochastic matrices and reports the speedup. The two paths must agree
// bitwise; this is asserted on every size.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "harris/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

std::vector<double> random_stochastic(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> exp_dist(1.0);
    std::vector<double> m(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        double sum = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
            m[x * n + y] = exp_dist(rng);
            sum += m[x * n + y];
        }
        for (std::size_t y = 0; y < n; ++y) m[x * n + y] /= sum;
    }
    return m;
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        body();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
    std::mt19937_64 rng(42);
    std::printf("threads: %d\n", harris::kernels::thread_count());
    std::printf("%-10s %6s %12s %12s %8s %9s\n", "kernel", "n", "serial[s]", "openmp[s]",
                "speedup", "bitwise");

    for (std::size_t n : {64, 256, 512, 1024}) {
        const std::vector<double> a = random_stochastic(n, rng);
        const std::vector<double> b = random_stochastic(n, rng);
        std::vector<double> c_serial(n * n), c_parallel(n * n);

        const int reps = n <= 256 ? 5 : 3;
        const double ts = time_best_of(
            reps, [&] { harris::kernels::serial::matmul(a.data(), b.data(), c_serial.data(), n); });
        const double tp = time_best_of(
            reps, [&] { harris::kernels::matmul(a.data(), b.data(), c_parallel.data(), n); });
        const bool same = std::memcmp(c_serial.data(), c_parallel.data(),
                                      n * n * sizeof(double)) == 0;
        std::printf("%-10s %6zu %12.6f %12.6f %8.2fx %9s\n", "matmul", n, ts, tp, ts / tp,
                    same ? "yes" : "NO");
        if (!same) return 1;
    }

    for (std::size_t n : {256, 1024, 4096}) {
        const std::vector<double> a = random_stochastic(n, rng);
        std::vector<double> x(n, 1.0 / static_cast<double>(n));
        std::vector<double> y_serial(n), y_parallel(n);

        const double ts = time_best_of(
            5, [&] { harris::kernels::serial::matvec(a.data(), x.data(), y_serial.data(), n); });
        const double tp = time_best_of(
            5, [&] { harris::kernels::matvec(a.data(), x.data(), y_parallel.data(), n); });
        bool same = std::memcmp(y_serial.data(), y_parallel.data(), n * sizeof(double)) == 0;
        std::printf("%-10s %6zu %12.6f %12.6f %8.2fx %9s\n", "matvec", n, ts, tp, ts / tp,
                    same ? "yes" : "NO");
        if (!same) return 1;

        const double ts2 = time_best_of(
            5, [&] { harris::kernels::serial::vecmat(x.data(), a.data(), y_serial.data(), n); });
        const double tp2 = time_best_of(
            5, [&] { harris::kernels::vecmat(x.data(), a.data(), y_parallel.data(), n); });
        same = std::memcmp(y_serial.data(), y_parallel.data(), n * sizeof(double)) == 0;
        std::printf("%-10s %6zu %12.6f %12.6f %8.2fx %9s\n", "vecmat", n, ts2, tp2, ts2 / tp2,
                    same ? "yes" : "NO");
        if (!same) return 1;
    }
    return 0;
}

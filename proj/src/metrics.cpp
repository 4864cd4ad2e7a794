#include "harris/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "harris/kernels.hpp"

namespace harris {

BetaScale::BetaScale(double v) : value(v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ParamError("beta must be finite and > 0");
}

namespace {

void require_match(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionError("length mismatch between function and weight");
}

} // namespace

double weighted_sup_norm(std::span<const double> phi, const LyapunovWeight& v, BetaScale beta) {
    require_match(phi.size(), v.size());
    double best = 0.0;
    for (std::size_t x = 0; x < phi.size(); ++x)
        best = std::max(best, std::abs(phi[x]) / (1.0 + beta.value * v[x]));
    return best;
}

double dbeta_point(std::size_t x, std::size_t y, const LyapunovWeight& v, BetaScale beta) {
    if (x >= v.size() || y >= v.size()) throw DimensionError("state index out of range");
    if (x == y) return 0.0;
    // Written as the sum of the two state weights so that rho_beta of two
    // Dirac measures reproduces it bit for bit.
    return (1.0 + beta.value * v[x]) + (1.0 + beta.value * v[y]);
}

double lipschitz_seminorm(std::span<const double> phi, const LyapunovWeight& v, BetaScale beta) {
    require_match(phi.size(), v.size());
    const std::int64_t n = static_cast<std::int64_t>(phi.size());
    const double b = beta.value;
    double best = 0.0;
#pragma omp parallel num_threads(kernels::thread_count()) if (n >= 64)
    {
        double local = 0.0;
#pragma omp for schedule(static) nowait
        for (std::int64_t x = 0; x < n; ++x)
            for (std::int64_t y = x + 1; y < n; ++y) {
                const double d = (1.0 + b * v[x]) + (1.0 + b * v[y]);
                local = std::max(local, std::abs(phi[x] - phi[y]) / d);
            }
#pragma omp critical
        best = std::max(best, local);
    }
    return best;
}

double optimal_shift(std::span<const double> phi, const LyapunovWeight& v, BetaScale beta) {
    require_match(phi.size(), v.size());
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < phi.size(); ++x)
        c = std::min(c, 1.0 + beta.value * v[x] - phi[x]);
    return c;
}

double rho_beta(const Measure& mu1, const Measure& mu2, const LyapunovWeight& v, BetaScale beta) {
    require_match(mu1.size(), v.size());
    require_match(mu2.size(), v.size());
    double acc = 0.0;
    for (std::size_t x = 0; x < v.size(); ++x)
        acc += (1.0 + beta.value * v[x]) * std::abs(mu1[x] - mu2[x]);
    return acc;
}

double rho_beta_dual(const Measure& mu1, const Measure& mu2, const LyapunovWeight& v,
                     BetaScale beta) {
    require_match(mu1.size(), v.size());
    require_match(mu2.size(), v.size());
    double acc = 0.0;
    for (std::size_t x = 0; x < v.size(); ++x) {
        const double diff = mu1[x] - mu2[x];
        const double sign = diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
        const double extremal = sign * (1.0 + beta.value * v[x]);
        acc += extremal * diff;
    }
    return acc;
}

} // namespace harris

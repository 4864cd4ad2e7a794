#include "harris/demo_chains.hpp"

#include <cmath>
#include <numbers>

namespace harris {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_density(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

} // namespace

NamedExample flip_chain() {
    Kernel kernel({{0.0, 1.0}, {1.0, 0.0}});
    return NamedExample{
        "flip",
        StateSpace(2, {"0", "1"}),
        std::move(kernel),
        LyapunovWeight({1.0, 2.0}),
        KnownAltConstants{{0}, 0.5, 1.5, 1.0, {0.0, 1.0}},
    };
}

NamedExample reflected_random_walk(std::size_t size, double p) {
    if (size < 3) throw ParamError("reflected walk needs at least 3 states");
    if (!(p > 0.0 && p < 0.5)) throw ParamError("p must lie in (0, 1/2)");

    std::vector<double> rows(size * size, 0.0);
    std::vector<double> v(size);
    for (std::size_t x = 0; x < size; ++x) {
        v[x] = static_cast<double>(x);
        if (x + 1 < size)
            rows[x * size + x + 1] = p;
        else
            rows[x * size + x] += p;
        if (x > 0)
            rows[x * size + x - 1] = 1.0 - p;
        else
            rows[x * size + x] += 1.0 - p;
    }
    return NamedExample{"walk", StateSpace(size), Kernel(size, std::move(rows)),
                        LyapunovWeight(std::move(v)), std::nullopt};
}

NamedExample discretized_ar1(double a, double sigma, double grid_min, double grid_max,
                             std::size_t n) {
    if (!(std::abs(a) < 1.0)) throw ParamError("|a| must be < 1");
    if (!(sigma > 0.0)) throw ParamError("sigma must be > 0");
    if (n < 10) throw ParamError("AR(1) grid needs at least 10 cells");
    if (!(grid_max > grid_min)) throw ParamError("grid_max must exceed grid_min");

    const double h = (grid_max - grid_min) / static_cast<double>(n);
    std::vector<double> mid(n);
    for (std::size_t i = 0; i < n; ++i)
        mid[i] = grid_min + (static_cast<double>(i) + 0.5) * h;

    std::vector<double> rows(n * n);
    std::vector<double> v(n);
    for (std::size_t x = 0; x < n; ++x) {
        v[x] = 1.0 + mid[x] * mid[x];
        const double center = a * mid[x];
        double sum = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
            double mass = normal_density((mid[y] - center) / sigma) * h / sigma;
            if (y == 0) mass += normal_cdf((grid_min - center) / sigma);
            if (y == n - 1) mass += 1.0 - normal_cdf((grid_max - center) / sigma);
            rows[x * n + y] = mass;
            sum += mass;
        }
        for (std::size_t y = 0; y < n; ++y) rows[x * n + y] /= sum;
    }
    return NamedExample{"ar1", StateSpace(n), Kernel(n, std::move(rows)),
                        LyapunovWeight(std::move(v)), std::nullopt};
}

std::vector<std::string> demo_names() { return {"flip", "avg-flip", "walk", "ar1"}; }

NamedExample demo_by_name(std::string_view name) {
    if (name == "flip") return flip_chain();
    if (name == "avg-flip") {
        NamedExample flip = flip_chain();
        return NamedExample{"avg-flip", StateSpace(2, {"0", "1"}),
                            flip.kernel.cesaro_average(6), flip.v, std::nullopt};
    }
    if (name == "walk") return reflected_random_walk(5, 0.25);
    if (name == "ar1") return discretized_ar1(0.5, 1.0, -6.0, 6.0, 61);
    throw ParamError("unknown demo chain '" + std::string(name) +
                     "'; available: flip, avg-flip, walk, ar1");
}

} // namespace harris

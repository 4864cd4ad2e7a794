#include "harris/chain.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace harris;

namespace {

Kernel flip() { return Kernel({{0.0, 1.0}, {1.0, 0.0}}); }

} // namespace

TEST(StateSpace, ValidatesSize) {
    EXPECT_THROW(StateSpace(0), ParamError);
    EXPECT_THROW(StateSpace(2, {"a"}), DimensionError);
    EXPECT_EQ(StateSpace(3).size(), 3u);
}

TEST(LyapunovWeight, RejectsNegativeAndNonFinite) {
    EXPECT_THROW(LyapunovWeight({-0.5}), ParamError);
    EXPECT_THROW(LyapunovWeight({std::numeric_limits<double>::infinity()}), ParamError);
    EXPECT_THROW(LyapunovWeight({std::nan("")}), ParamError);
    const LyapunovWeight v({1.0, 2.0});
    EXPECT_EQ(v.min_value(), 1.0);
    EXPECT_EQ(v.max_value(), 2.0);
}

TEST(Measure, NormalizesWithinTolerance) {
    const Measure m(std::vector<double>{0.5, 0.5 + 5e-10});
    EXPECT_DOUBLE_EQ(m[0] + m[1], 1.0);
    EXPECT_THROW(Measure(std::vector<double>{0.5, 0.6}), ParamError);
    EXPECT_THROW(Measure(std::vector<double>{-0.1, 1.1}), ParamError);
}

TEST(Measure, DiracAndUniform) {
    const Measure d = Measure::dirac(3, 1);
    EXPECT_EQ(d[0], 0.0);
    EXPECT_EQ(d[1], 1.0);
    const Measure u = Measure::uniform(4);
    EXPECT_DOUBLE_EQ(u[2], 0.25);
    EXPECT_THROW(Measure::dirac(3, 3), DimensionError);
}

TEST(Kernel, ConstructionValidatesRows) {
    EXPECT_THROW(Kernel({{0.5, 0.4}, {0.5, 0.5}}), ParamError);  // row sum off
    EXPECT_THROW(Kernel({{1.5, -0.5}, {0.5, 0.5}}), ParamError); // negative entry
    EXPECT_THROW(Kernel(2, {1.0, 0.0, 1.0}), DimensionError);
    const Kernel k({{0.5, 0.5 + 2e-10}, {0.25, 0.75}});
    EXPECT_DOUBLE_EQ(k(0, 0) + k(0, 1), 1.0);
}

TEST(Kernel, ApplyToFunctionExamples) {
    const std::vector<double> v{1.0, 2.0};
    const auto pv = flip().apply_to_function(v);
    EXPECT_DOUBLE_EQ(pv[0], 2.0);
    EXPECT_DOUBLE_EQ(pv[1], 1.0);

    const Kernel id = Kernel::identity(3);
    const std::vector<double> phi{0.5, -1.0, 2.0};
    EXPECT_EQ(id.apply_to_function(phi), phi);

    const double third = 1.0 / 3.0;
    const Kernel uniform3(
        {{third, third, third}, {third, third, third}, {third, third, third}});
    const auto out = uniform3.apply_to_function(std::vector<double>{0.0, 3.0, 6.0});
    for (double x : out) EXPECT_DOUBLE_EQ(x, 3.0);

    EXPECT_THROW(flip().apply_to_function(phi), DimensionError);
}

TEST(Kernel, ApplyToMeasureExamples) {
    const Measure delta0 = Measure::dirac(2, 0);
    const Measure pushed = flip().apply_to_measure(delta0);
    EXPECT_DOUBLE_EQ(pushed[0], 0.0);
    EXPECT_DOUBLE_EQ(pushed[1], 1.0);

    const Kernel id = Kernel::identity(2);
    const Measure mu(std::vector<double>{0.3, 0.7});
    const Measure same = id.apply_to_measure(mu);
    EXPECT_DOUBLE_EQ(same[0], 0.3);

    const Kernel k({{0.5, 0.5}, {0.25, 0.75}});
    const Measure half(std::vector<double>{0.5, 0.5});
    const Measure out = k.apply_to_measure(half);
    EXPECT_DOUBLE_EQ(out[0], 0.375);
    EXPECT_DOUBLE_EQ(out[1], 0.625);

    EXPECT_THROW(k.apply_to_measure(Measure::uniform(3)), DimensionError);
}

TEST(Kernel, PowerExamples) {
    const Kernel p2 = flip().power(2);
    EXPECT_DOUBLE_EQ(p2(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(p2(0, 1), 0.0);
    EXPECT_DOUBLE_EQ(p2(1, 1), 1.0);

    const Kernel p0 = flip().power(0);
    EXPECT_DOUBLE_EQ(p0(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(p0(0, 1), 0.0);

    const Kernel k({{0.5, 0.5}, {0.25, 0.75}});
    const Kernel p1 = k.power(1);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) EXPECT_DOUBLE_EQ(p1(x, y), k(x, y));
}

TEST(Kernel, CesaroExamples) {
    const Kernel q1 = flip().cesaro_average(1);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) EXPECT_DOUBLE_EQ(q1(x, y), 0.5);

    // Exponents 0..6 hit the identity four times and the swap three times.
    const Kernel q6 = flip().cesaro_average(6);
    EXPECT_NEAR(q6(0, 0), 4.0 / 7.0, 1e-15);
    EXPECT_NEAR(q6(0, 1), 3.0 / 7.0, 1e-15);
    EXPECT_NEAR(q6(1, 0), 3.0 / 7.0, 1e-15);
    EXPECT_NEAR(q6(1, 1), 4.0 / 7.0, 1e-15);

    const Kernel k({{0.5, 0.5}, {0.25, 0.75}});
    const Kernel q0 = k.cesaro_average(0);
    EXPECT_DOUBLE_EQ(q0(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(q0(1, 0), 0.0);
}

TEST(Kernel, RowStochasticityPreserved) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Kernel k = harris::testing::random_kernel(17, rng);
        for (const Kernel& derived : {k.power(5), k.cesaro_average(8)}) {
            for (std::size_t x = 0; x < derived.size(); ++x) {
                double sum = 0.0;
                for (std::size_t y = 0; y < derived.size(); ++y) {
                    sum += derived(x, y);
                    EXPECT_GE(derived(x, y), 0.0);
                }
                EXPECT_NEAR(sum, 1.0, 1e-12);
            }
        }
    }
}

TEST(Kernel, MassConservationAndDuality) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const Kernel k = harris::testing::random_kernel(13, rng);
        const Measure mu = harris::testing::random_measure(13, rng);
        const auto phi = harris::testing::random_function(13, rng);

        const Measure pushed = k.apply_to_measure(mu);
        double mass = 0.0;
        for (std::size_t i = 0; i < pushed.size(); ++i) mass += pushed[i];
        EXPECT_NEAR(mass, 1.0, 1e-12);

        // sum_x mu(x) (P phi)(x) == sum_y (P mu)(y) phi(y)
        const auto pphi = k.apply_to_function(phi);
        EXPECT_NEAR(mu.expectation(pphi), pushed.expectation(phi), 1e-12);
    }
}

TEST(Kernel, PositivityPreserved) {
    std::mt19937_64 rng(13);
    const Kernel k = harris::testing::random_kernel(9, rng);
    const auto phi = harris::testing::random_function(9, rng, 0.0, 5.0);
    for (double x : k.apply_to_function(phi)) EXPECT_GE(x, 0.0);
}

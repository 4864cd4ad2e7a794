#include "harris/averaging.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "harris/demo_chains.hpp"
#include "harris/metrics.hpp"
#include "test_support.hpp"

using namespace harris;

namespace {

Kernel flip() { return Kernel({{0.0, 1.0}, {1.0, 0.0}}); }
const LyapunovWeight kFlipV({1.0, 2.0});

AltCertificate flip_alt() { return check_alt(flip(), kFlipV, {0}, 0.5, 1.5); }

// Random chain together with a constructed (S, gamma_tilde, b) that makes
// check_alt pass: S collects the states where the bare drift fails, b covers
// the worst violation.
struct AltFixture {
    Kernel kernel;
    LyapunovWeight v;
    AltCertificate cert;
};

AltFixture random_alt_fixture(std::size_t n, std::mt19937_64& rng) {
    const Kernel k = harris::testing::random_kernel(n, rng);
    const LyapunovWeight v = harris::testing::random_weight(n, rng, 1.0, 5.0);
    const double gamma_tilde = std::uniform_real_distribution<double>(0.2, 0.9)(rng);

    const auto pv = k.apply_to_function(v.values());
    std::vector<std::size_t> s;
    double b = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        const double excess = pv[x] - gamma_tilde * v[x];
        if (excess > 0.0) {
            s.push_back(x);
            b = std::max(b, excess);
        }
    }
    if (s.empty()) s.push_back(0);
    return AltFixture{k, v, check_alt(k, v, s, gamma_tilde, b)};
}

} // namespace

TEST(CheckAlt, FlipChainRemarkConstants) {
    const AltCertificate cert = flip_alt();
    EXPECT_TRUE(cert.valid);
    EXPECT_DOUBLE_EQ(cert.alpha_tilde, 1.0);
    EXPECT_DOUBLE_EQ(cert.nu_tilde[0], 0.0);
    EXPECT_DOUBLE_EQ(cert.nu_tilde[1], 1.0);
    EXPECT_DOUBLE_EQ(cert.drift_slack[0], 0.0);
    EXPECT_DOUBLE_EQ(cert.drift_slack[1], 0.0);
}

TEST(CheckAlt, DriftViolationYieldsInvalid) {
    const AltCertificate cert = check_alt(flip(), kFlipV, {0}, 0.5, 0.4);
    EXPECT_FALSE(cert.valid);
    EXPECT_LT(cert.drift_slack[0], 0.0); // P V(0) = 2 > 0.5 + 0.4
}

TEST(CheckAlt, FullSCollapsesToDoeblin) {
    std::mt19937_64 rng(61);
    const Kernel k = harris::testing::random_kernel(6, rng);
    const LyapunovWeight v = harris::testing::random_weight(6, rng, 1.0, 4.0);
    const AltCertificate cert = check_alt(k, v, {0, 1, 2, 3, 4, 5}, 0.5, 2.0 * v.max_value());
    EXPECT_TRUE(cert.valid);
    EXPECT_GT(cert.alpha_tilde, 0.0);
}

TEST(CheckAlt, ParameterValidation) {
    EXPECT_THROW(check_alt(flip(), LyapunovWeight({0.5, 2.0}), {0}, 0.5, 1.5), ParamError);
    EXPECT_THROW(check_alt(flip(), kFlipV, {0}, 1.0, 1.5), ParamError);
    EXPECT_THROW(check_alt(flip(), kFlipV, {0}, 0.5, -1.0), ParamError);
    EXPECT_THROW(check_alt(flip(), kFlipV, {}, 0.5, 1.5), ParamError);
    EXPECT_THROW(check_alt(flip(), kFlipV, {5}, 0.5, 1.5), DimensionError);
    // Rows over S = {0,1} have componentwise minimum zero.
    EXPECT_THROW(check_alt(flip(), kFlipV, {0, 1}, 0.5, 1.5), NoMinorization);
}

TEST(DerivePlainFromAlt, FlipChain) {
    const auto [gamma, K] = derive_plain_from_alt(flip_alt());
    EXPECT_DOUBLE_EQ(gamma, 0.5);
    EXPECT_DOUBLE_EQ(K, 1.5);
    EXPECT_TRUE(check_drift(flip(), kFlipV, gamma, K).valid);

    AltCertificate invalid = flip_alt();
    invalid.valid = false;
    EXPECT_THROW(derive_plain_from_alt(invalid), CertError);
}

TEST(DerivePlainFromAlt, ReverifiesOnRandomChains) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        const AltFixture fx = random_alt_fixture(7, rng);
        ASSERT_TRUE(fx.cert.valid);
        const auto [gamma, K] = derive_plain_from_alt(fx.cert);
        EXPECT_TRUE(check_drift(fx.kernel, fx.v, gamma, K).valid);
    }
}

TEST(ComputeAveragingN, FlipChainConstruction) {
    // 2^(n+1) >= 12.2 forces n_star = 3; nu_tilde = delta_1 reaches S = {0}
    // after one step, so ell = 2 and N = 6.
    const AveragingCertificate avg = compute_averaging_N(flip(), kFlipV, flip_alt(), 6.1);
    EXPECT_EQ(avg.n_star, 3u);
    EXPECT_EQ(avg.ell, 2u);
    EXPECT_EQ(avg.n, 6u);
    EXPECT_DOUBLE_EQ(avg.alpha_hat, 1.0); // P^2 delta_1 = delta_1
    EXPECT_NEAR(avg.nu[0], 0.5, 1e-15);   // (delta_1 + delta_0)/2
    EXPECT_NEAR(avg.nu[1], 0.5, 1e-15);
    EXPECT_NEAR(avg.remark_bound, 1.0 + std::log(12.0) / std::log(0.5), 1e-12);
    EXPECT_NEAR(avg.remark_bound, -2.5849625007211561, 1e-12);
}

TEST(ComputeAveragingN, AbsorbingSGivesEllOne) {
    // S = {0} absorbing with nu_tilde supported in S: (P^0 nu_tilde)(S) > 0.
    const Kernel k({{0.9, 0.1}, {0.6, 0.4}});
    const LyapunovWeight v({1.0, 3.0});
    const AltCertificate cert = check_alt(k, v, {0}, 0.7, 1.0);
    ASSERT_TRUE(cert.valid);
    EXPECT_GT(cert.nu_tilde[0], 0.0);
    const AveragingCertificate avg = compute_averaging_N(k, v, cert, 20.0);
    EXPECT_EQ(avg.ell, 1u);
    EXPECT_EQ(avg.n, avg.n_star + 2u);
}

TEST(ComputeAveragingN, RBoundaryRejected) {
    // 2b/(1-gamma_tilde) = 6 exactly.
    EXPECT_THROW(compute_averaging_N(flip(), kFlipV, flip_alt(), 6.0), RTooSmall);
    EXPECT_THROW(compute_averaging_N(flip(), kFlipV, flip_alt(), 3.0), RTooSmall);
}

TEST(ComputeAveragingN, UnreachableSmallSet) {
    // Two disconnected blocks: S = {0} can never be reached from nu_tilde,
    // which lives on the other block. The drift holds with b large on S and
    // V level arranged so the certificate is valid.
    const Kernel k({{1.0, 0.0, 0.0, 0.0},
                    {0.0, 0.0, 0.5, 0.5},
                    {0.0, 0.5, 0.0, 0.5},
                    {0.0, 0.5, 0.5, 0.0}});
    const LyapunovWeight v({1.0, 1.0, 1.0, 1.0});
    // With V constant at 1 the drift needs b >= 1 - gamma_tilde on every
    // state, so S must be the whole space for validity; instead disable the
    // drift check by building the certificate directly.
    AltCertificate cert;
    cert.s = {0};
    cert.gamma_tilde = 0.5;
    cert.b = 1.0;
    cert.alpha_tilde = 1.0;
    cert.nu_tilde = Measure(std::vector<double>{0.0, 1.0 / 3, 1.0 / 3, 1.0 / 3});
    cert.drift_slack = {0.0, 0.0, 0.0, 0.0};
    cert.valid = true;
    EXPECT_THROW(compute_averaging_N(k, v, cert, 5.0), Unreachable);
}

TEST(CertifyAveraged, FlipChainEndToEnd) {
    const AveragedCertification out = certify_averaged(flip(), kFlipV, flip_alt(), 6.1);

    EXPECT_EQ(out.averaging.n, 6u);
    EXPECT_NEAR(out.q(0, 0), 4.0 / 7.0, 1e-15);
    EXPECT_NEAR(out.q(0, 1), 3.0 / 7.0, 1e-15);
    EXPECT_TRUE(out.drift.valid);
    EXPECT_NEAR(out.minorization.alpha, 6.0 / 7.0, 1e-12);
    EXPECT_LT(out.optimized.contraction.alpha_bar, 1.0);
    EXPECT_TRUE(out.verification.pass);

    // The standalone drift pair quoted for Q also holds: Q V = (10/7, 11/7).
    const DriftCertificate direct = check_drift(out.q, kFlipV, 0.9, fit_K(out.q, kFlipV, 0.9));
    EXPECT_TRUE(direct.valid);
    EXPECT_NEAR(fit_K(out.q, kFlipV, 0.9), 10.0 / 7.0 - 0.9, 1e-12);
}

TEST(CertifyAveraged, WithoutAveragingTheFlipChainFails) {
    // N = 0 means Q = P, whose rows have componentwise minimum zero.
    EXPECT_THROW(extract_minorization(flip().cesaro_average(0), kFlipV, 6.1), NoMinorization);
}

TEST(CertifyAveraged, IidChainIsDoeblin) {
    const Kernel k({{0.3, 0.7}, {0.3, 0.7}});
    const LyapunovWeight v({1.0, 2.0});
    const AltCertificate cert = check_alt(k, v, {0, 1}, 0.5, 2.0);
    ASSERT_TRUE(cert.valid);
    EXPECT_DOUBLE_EQ(cert.alpha_tilde, 1.0);
    const AveragedCertification out =
        certify_averaged(k, v, cert, default_averaging_radius(cert));
    EXPECT_TRUE(out.verification.pass);
}

TEST(CertifyAveraged, AveragingCertifiesRandomChains) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const AltFixture fx = random_alt_fixture(6, rng);
        ASSERT_TRUE(fx.cert.valid);
        const double r = default_averaging_radius(fx.cert) +
                         (fx.cert.b == 0.0 ? 1.0 + fx.v.min_value() : 0.0);
        const AveragedCertification out = certify_averaged(fx.kernel, fx.v, fx.cert, r);
        EXPECT_TRUE(out.drift.valid);
        EXPECT_GT(out.minorization.alpha, 0.0);
        EXPECT_TRUE(out.verification.pass);

        // Proof inequalities re-checked numerically.
        if (fx.cert.b > 0.0)
            EXPECT_GE(iterated_drift_lower_bound(fx.kernel, fx.v, fx.cert, out.averaging.n_star),
                      1.0 / (2.0 * fx.cert.b) - 1e-10);
        EXPECT_GT(summed_visit_lower_bound(fx.kernel, fx.cert, out.averaging), 0.0);

        // P nu >= alpha_hat nu for the constructed nu.
        const Measure pushed = fx.kernel.apply_to_measure(out.averaging.nu);
        for (std::size_t y = 0; y < fx.kernel.size(); ++y)
            EXPECT_GE(pushed[y] - out.averaging.alpha_hat * out.averaging.nu[y], -1e-10);
    }
}

TEST(LowerBounds, FlipChainIteratedDrift) {
    // n_star = 3 at R = 6.1; the drift sum minimum is 0.625, above 1/(2b) = 1/3.
    const double bound = iterated_drift_lower_bound(flip(), kFlipV, flip_alt(), 3);
    EXPECT_NEAR(bound, 0.625, 1e-15);
    EXPECT_GE(bound, 1.0 / 3.0 - 1e-10);
}

#include "harris/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "harris/kernels.hpp"

namespace harris {

namespace {

constexpr double kSlackTolerance = 1e-12;
constexpr double kStrictMargin = 1e-9;   // relative margin for strict inequalities
constexpr double kVerifyTolerance = 1e-10;
constexpr double kClampedK = 1e-12;
constexpr std::uint64_t kMeasurePairSeed = 0x5eed5eedULL;

void require_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw ParamError("gamma must lie in (0,1)");
}

// R > 2K/(1-gamma), enforced as R >= (1+1e-9) * 2K/(1-gamma).
void require_level_radius(double r, double gamma, double K) {
    if (!(r >= (1.0 + kStrictMargin) * 2.0 * K / (1.0 - gamma)))
        throw RTooSmall("R must exceed 2K/(1-gamma), i.e. gamma + 2K/R < 1");
}

Measure random_measure(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> exp_dist(1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& x : w) {
        x = exp_dist(rng);
        sum += x;
    }
    for (double& x : w) x /= sum;
    return Measure(std::move(w));
}

} // namespace

double DriftCertificate::min_slack() const {
    return *std::min_element(slack.begin(), slack.end());
}

DriftCertificate check_drift(const Kernel& k, const LyapunovWeight& v, double gamma, double K) {
    require_gamma(gamma);
    if (!(K >= 0.0)) throw ParamError("K must be >= 0");
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");

    const std::vector<double> pv = k.apply_to_function(v.values());
    DriftCertificate cert;
    cert.gamma = gamma;
    cert.k = K;
    cert.slack.resize(k.size());
    for (std::size_t x = 0; x < k.size(); ++x) cert.slack[x] = gamma * v[x] + K - pv[x];
    cert.valid = cert.min_slack() >= -kSlackTolerance;
    return cert;
}

double fit_K(const Kernel& k, const LyapunovWeight& v, double gamma) {
    require_gamma(gamma);
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");
    const std::vector<double> pv = k.apply_to_function(v.values());
    double K = 0.0;
    for (std::size_t x = 0; x < k.size(); ++x) K = std::max(K, pv[x] - gamma * v[x]);
    return K;
}

MinorizationCertificate extract_minorization(const Kernel& k, const LyapunovWeight& v, double r) {
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");

    MinorizationCertificate cert;
    cert.r = r;
    for (std::size_t x = 0; x < k.size(); ++x)
        if (v[x] <= r) cert.small_set.push_back(x);
    if (cert.small_set.empty()) throw EmptyLevelSet("level set {V <= R} is empty");

    std::vector<double> m(k.size(), std::numeric_limits<double>::infinity());
    for (std::size_t x : cert.small_set) {
        const auto row = k.row(x);
        for (std::size_t y = 0; y < k.size(); ++y) m[y] = std::min(m[y], row[y]);
    }
    double alpha = 0.0;
    for (double my : m) alpha += my;
    if (alpha <= 0.0)
        throw NoMinorization("componentwise row minimum over the level set is zero");

    for (double& my : m) my /= alpha;
    cert.alpha = std::min(alpha, 1.0);
    cert.nu = Measure(std::move(m));
    cert.residual_ok = true; // P(x,y) >= m(y) on C by construction
    return cert;
}

ContractionCertificate contraction_constants(double gamma, double K, double alpha, double r,
                                             double alpha0) {
    require_gamma(gamma);
    if (!(K > 0.0)) throw ParamError("K must be > 0 (a zero fit is clamped upstream)");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ParamError("alpha must lie in (0,1]");
    if (!(alpha0 > 0.0 && alpha0 < alpha)) throw ParamError("alpha0 must lie in (0,alpha)");
    require_level_radius(r, gamma, K);

    ContractionCertificate cert;
    cert.gamma = gamma;
    cert.k = K;
    cert.alpha = alpha;
    cert.r = r;
    cert.alpha0 = alpha0;
    cert.beta = alpha0 / K;
    cert.gamma0 = gamma + 2.0 * K / r;
    cert.gamma1 = (2.0 + cert.beta * r * cert.gamma0) / (2.0 + cert.beta * r);
    cert.gamma2 = std::max(1.0 - (alpha - alpha0), gamma);
    cert.alpha_bar = std::max(cert.gamma1, cert.gamma2);
    cert.alpha_is_one = alpha == 1.0;
    return cert;
}

double max_dirac_ratio(const Kernel& k, const LyapunovWeight& v, BetaScale beta) {
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");
    const std::int64_t n = static_cast<std::int64_t>(k.size());
    const double b = beta.value;

    std::vector<double> w(k.size());
    for (std::size_t x = 0; x < k.size(); ++x) w[x] = 1.0 + b * v[x];

    double best = 0.0;
#pragma omp parallel num_threads(kernels::thread_count()) if (n >= 64)
    {
        double local = 0.0;
#pragma omp for schedule(static) nowait
        for (std::int64_t x = 0; x < n; ++x) {
            const auto row_x = k.row(static_cast<std::size_t>(x));
            for (std::int64_t y = x + 1; y < n; ++y) {
                const auto row_y = k.row(static_cast<std::size_t>(y));
                double rho = 0.0;
                for (std::int64_t z = 0; z < n; ++z)
                    rho += w[z] * std::abs(row_x[z] - row_y[z]);
                local = std::max(local, rho / (w[x] + w[y]));
            }
        }
#pragma omp critical
        best = std::max(best, local);
    }
    return best;
}

ContractionReport verify_pointwise_contraction(const Kernel& k, const LyapunovWeight& v,
                                               ContractionCertificate& cert,
                                               std::size_t measure_pairs) {
    const BetaScale beta(cert.beta);
    ContractionReport report;
    report.dirac_pairs = k.size() * (k.size() - 1);
    report.max_dirac_ratio = max_dirac_ratio(k, v, beta);
    report.dirac_pass = report.max_dirac_ratio <= cert.alpha_bar + kVerifyTolerance;

    std::mt19937_64 rng(kMeasurePairSeed);
    report.measure_pairs = measure_pairs;
    report.max_measure_excess = -std::numeric_limits<double>::infinity();
    report.measure_pass = true;
    for (std::size_t i = 0; i < measure_pairs; ++i) {
        const Measure mu1 = random_measure(k.size(), rng);
        const Measure mu2 = random_measure(k.size(), rng);
        const double before = rho_beta(mu1, mu2, v, beta);
        const double after = rho_beta(k.apply_to_measure(mu1), k.apply_to_measure(mu2), v, beta);
        const double excess = after - cert.alpha_bar * before;
        report.max_measure_excess = std::max(report.max_measure_excess, excess);
        if (excess > kVerifyTolerance) report.measure_pass = false;
    }
    if (measure_pairs == 0) report.max_measure_excess = 0.0;

    report.pass = report.dirac_pass && report.measure_pass;
    cert.empirically_verified = report.pass;
    return report;
}

CertificationResult optimize_constants(const Kernel& k, const LyapunovWeight& v) {
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");

    // R candidates: sorted distinct V values scaled by the fixed factors.
    std::vector<double> distinct(v.values());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<double> radii;
    for (double scale : {1.0 + 1e-6, 1.25, 1.5, 2.0})
        for (double value : distinct) radii.push_back(value * scale);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

    struct Candidate {
        double alpha_bar, gamma, r, alpha0_rank;
        CertificationResult result;
    };
    std::optional<Candidate> best;

    for (int gi = 1; gi <= 19; ++gi) {
        const double gamma = 0.05 * gi;
        double K = fit_K(k, v, gamma);
        const bool clamped = K == 0.0;
        if (clamped) K = kClampedK;

        for (double r : radii) {
            MinorizationCertificate minor;
            try {
                require_level_radius(r, gamma, K);
                minor = extract_minorization(k, v, r);
            } catch (const RTooSmall&) {
                continue;
            } catch (const NoMinorization&) {
                continue;
            } catch (const EmptyLevelSet&) {
                continue;
            }

            for (int ai = 1; ai <= 3; ++ai) {
                const double alpha0 = minor.alpha * (0.25 * ai);
                ContractionCertificate cert;
                try {
                    cert = contraction_constants(gamma, K, minor.alpha, r, alpha0);
                } catch (const ParamError&) {
                    continue;
                }
                cert.k_clamped = clamped;

                // Lexicographic tie-break: alpha_bar, gamma, R, then larger alpha0.
                const Candidate cand{cert.alpha_bar, gamma, r, -alpha0,
                                     {check_drift(k, v, gamma, K), minor, cert}};
                const auto key = [](const Candidate& c) {
                    return std::array<double, 4>{c.alpha_bar, c.gamma, c.r, c.alpha0_rank};
                };
                if (!best || key(cand) < key(*best)) best = cand;
            }
        }
    }

    if (!best)
        throw NoFeasiblePoint("no (gamma, R, alpha0) grid cell admits a valid certificate");
    return best->result;
}

} // namespace harris

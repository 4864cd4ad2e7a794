#include "harris/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace harris {

namespace {

constexpr double kSlackTolerance = 1e-12;
constexpr double kStrictMargin = 1e-9;

void require_states(const std::vector<std::size_t>& s, std::size_t n) {
    if (s.empty()) throw ParamError("S must contain at least one state");
    for (std::size_t x : s)
        if (x >= n) throw DimensionError("S contains a state index out of range");
}

} // namespace

AltCertificate check_alt(const Kernel& k, const LyapunovWeight& v,
                         const std::vector<std::size_t>& s, double gamma_tilde, double b) {
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");
    if (!(gamma_tilde > 0.0 && gamma_tilde < 1.0))
        throw ParamError("gamma_tilde must lie in (0,1)");
    if (!(b >= 0.0)) throw ParamError("b must be >= 0");
    if (v.min_value() < 1.0) throw ParamError("the alternative drift requires V >= 1");
    require_states(s, k.size());

    AltCertificate cert;
    cert.s = s;
    std::sort(cert.s.begin(), cert.s.end());
    cert.s.erase(std::unique(cert.s.begin(), cert.s.end()), cert.s.end());
    cert.gamma_tilde = gamma_tilde;
    cert.b = b;

    std::vector<char> in_s(k.size(), 0);
    for (std::size_t x : cert.s) in_s[x] = 1;

    const std::vector<double> pv = k.apply_to_function(v.values());
    cert.drift_slack.resize(k.size());
    bool drift_ok = true;
    for (std::size_t x = 0; x < k.size(); ++x) {
        cert.drift_slack[x] = gamma_tilde * v[x] + (in_s[x] ? b : 0.0) - pv[x];
        if (cert.drift_slack[x] < -kSlackTolerance) drift_ok = false;
    }

    std::vector<double> m(k.size(), std::numeric_limits<double>::infinity());
    for (std::size_t x : cert.s) {
        const auto row = k.row(x);
        for (std::size_t y = 0; y < k.size(); ++y) m[y] = std::min(m[y], row[y]);
    }
    double alpha = 0.0;
    for (double my : m) alpha += my;
    if (alpha <= 0.0)
        throw NoMinorization("componentwise row minimum over S is zero");
    for (double& my : m) my /= alpha;
    cert.alpha_tilde = std::min(alpha, 1.0);
    cert.nu_tilde = Measure(std::move(m));

    cert.valid = drift_ok;
    return cert;
}

std::pair<double, double> derive_plain_from_alt(const AltCertificate& cert) {
    if (!cert.valid) throw CertError("alternative certificate is not valid");
    return {cert.gamma_tilde, cert.b};
}

double default_averaging_radius(const AltCertificate& cert) {
    return 1.05 * 2.0 * cert.b / (1.0 - cert.gamma_tilde);
}

AveragingCertificate compute_averaging_N(const Kernel& k, const LyapunovWeight& v,
                                         const AltCertificate& cert, double r) {
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");
    if (!cert.valid) throw CertError("alternative certificate is not valid");
    if (!(r >= (1.0 + kStrictMargin) * 2.0 * cert.b / (1.0 - cert.gamma_tilde)) || !(r > 0.0))
        throw RTooSmall("R must exceed 2b/(1-gamma_tilde)");

    AveragingCertificate avg;
    avg.r = r;

    // Smallest n with gamma_tilde^(n+1) <= 1/(2R).
    const double target = 1.0 / (2.0 * r);
    unsigned n_plus_1 = 1;
    double power = cert.gamma_tilde;
    while (power > target) {
        power *= cert.gamma_tilde;
        ++n_plus_1;
    }
    avg.n_star = n_plus_1 - 1;

    // Smallest ell >= 1 with (P^(ell-1) nu_tilde)(S) > 0; the running Cesaro
    // sum of the iterates becomes nu.
    const std::size_t ell_cap = 10 * k.size();
    Measure iterate = cert.nu_tilde;
    std::vector<double> nu_sum(k.size(), 0.0);
    unsigned ell = 0;
    for (unsigned l = 1; l <= ell_cap; ++l) {
        for (std::size_t i = 0; i < k.size(); ++i) nu_sum[i] += iterate[i];
        if (iterate.mass_on(cert.s) > 0.0) {
            ell = l;
            break;
        }
        iterate = k.apply_to_measure(iterate);
    }
    if (ell == 0)
        throw Unreachable("no power up to 10n moves mass from nu_tilde into S");
    avg.ell = ell;
    for (double& x : nu_sum) x /= static_cast<double>(ell);
    avg.nu = Measure(std::move(nu_sum));

    // alpha_hat: largest a with P^ell nu_tilde >= a nu_tilde on its support.
    const Measure lifted = k.apply_to_measure(iterate); // P^ell nu_tilde
    double alpha_hat = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < k.size(); ++y)
        if (cert.nu_tilde[y] > 0.0)
            alpha_hat = std::min(alpha_hat, lifted[y] / cert.nu_tilde[y]);
    if (!(alpha_hat > 0.0))
        throw SupportMismatch("P^ell nu_tilde does not dominate nu_tilde on its support");
    avg.alpha_hat = alpha_hat;

    avg.n = avg.n_star + 1 + avg.ell;

    const double nu_tilde_v = cert.nu_tilde.expectation(v.values());
    avg.remark_bound =
        1.0 + std::log(2.0 * cert.b / (1.0 - cert.gamma_tilde) * nu_tilde_v) /
                  std::log(cert.gamma_tilde);
    return avg;
}

AveragedCertification certify_averaged(const Kernel& k, const LyapunovWeight& v,
                                       const AltCertificate& cert, double r) {
    AveragingCertificate avg = compute_averaging_N(k, v, cert, r);
    Kernel q = k.cesaro_average(avg.n);

    // Iterating the drift gives Q V <= gamma_q V + (b/(1-gamma_tilde))(1-gamma_q)
    // with gamma_q the Cesaro average of the gamma_tilde powers, so the level
    // constraint on Q reduces to the one already imposed on R.
    double gamma_sum = 0.0;
    double power = 1.0;
    for (unsigned j = 0; j <= avg.n; ++j) {
        gamma_sum += power;
        power *= cert.gamma_tilde;
    }
    const double gamma_q = gamma_sum / (static_cast<double>(avg.n) + 1.0);

    const double k_q = fit_K(q, v, gamma_q);
    DriftCertificate drift = check_drift(q, v, gamma_q, k_q);
    if (!drift.valid)
        throw CertError("averaged kernel fails the drift bound it is guaranteed to satisfy");

    MinorizationCertificate minor = extract_minorization(q, v, r);

    AveragedCertification out{std::move(avg), std::move(q), gamma_q,
                              std::move(drift), std::move(minor),
                              CertificationResult{}, ContractionReport{}};
    out.optimized = optimize_constants(out.q, v);
    out.verification = verify_pointwise_contraction(out.q, v, out.optimized.contraction);
    if (!out.verification.pass)
        throw CertError("averaged kernel failed the pointwise contraction check");
    return out;
}

double iterated_drift_lower_bound(const Kernel& k, const LyapunovWeight& v,
                                  const AltCertificate& cert, unsigned n_star) {
    std::vector<double> indicator(k.size(), 0.0);
    for (std::size_t x : cert.s) indicator[x] = 1.0;

    // sum_{j=0}^{n} gamma^j P^(n-j) 1_S accumulated back to front:
    // h_0 = 1_S, h_{j+1} = P h_j + gamma^{j+1} 1_S.
    std::vector<double> h = indicator;
    double power = 1.0;
    for (unsigned j = 0; j < n_star; ++j) {
        h = k.apply_to_function(h);
        power *= cert.gamma_tilde;
        for (std::size_t x = 0; x < k.size(); ++x) h[x] += power * indicator[x];
    }

    const double level = std::pow(cert.gamma_tilde, -(static_cast<double>(n_star) + 1.0)) / 2.0;
    double lower = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < k.size(); ++x)
        if (v[x] <= level) lower = std::min(lower, h[x]);
    return lower;
}

double summed_visit_lower_bound(const Kernel& k, const AltCertificate& cert,
                                const AveragingCertificate& avg) {
    const unsigned m = avg.n_star + 1;
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t x : cert.s) {
        Measure row(std::vector<double>(k.row(x).begin(), k.row(x).end()));
        // row = P^k(x,.) for k = m..m+ell, accumulated.
        for (unsigned step = 1; step < m; ++step) row = k.apply_to_measure(row);
        std::vector<double> acc(k.size(), 0.0);
        for (unsigned j = 0; j <= avg.ell; ++j) {
            for (std::size_t y = 0; y < k.size(); ++y) acc[y] += row[y];
            if (j < avg.ell) row = k.apply_to_measure(row);
        }
        for (std::size_t y = 0; y < k.size(); ++y)
            if (avg.nu[y] > 0.0) bound = std::min(bound, acc[y] / avg.nu[y]);
    }
    return bound;
}

} // namespace harris

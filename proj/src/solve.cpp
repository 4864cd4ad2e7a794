#include "harris/solve.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "harris/metrics.hpp"

namespace harris {

namespace {

constexpr double kStepTolerance = 1e-10;
constexpr double kNullSpaceTolerance = 1e-8;
constexpr double kStationarityTolerance = 1e-12;

} // namespace

ConvergenceRun invariant_measure(const Kernel& k, const LyapunovWeight& v,
                                 const ContractionCertificate& cert, double tol,
                                 const Measure& mu0) {
    if (!cert.empirically_verified || !(cert.alpha_bar < 1.0))
        throw CertError("invariant_measure requires an empirically verified certificate");
    if (!(tol > 0.0)) throw ParamError("tol must be > 0");
    if (mu0.size() != k.size()) throw DimensionError("mu0 length does not match the kernel");
    if (v.size() != k.size()) throw DimensionError("weight length does not match the kernel");

    const BetaScale beta(cert.beta);
    const double abar = cert.alpha_bar;

    ConvergenceRun run;
    run.beta = cert.beta;

    Measure prev = mu0;
    Measure cur = k.apply_to_measure(prev);
    const double d0 = rho_beta(cur, prev, v, beta);
    run.initial_step = d0;
    run.distances.push_back(d0);
    run.iterates = 1;

    double rate_power = abar; // abar^n at n = iterates
    while (rate_power * d0 / (1.0 - abar) > tol) {
        Measure next = k.apply_to_measure(cur);
        const double step = rho_beta(next, cur, v, beta);
        if (step > abar * run.distances.back() + kStepTolerance)
            throw ContractViolation(
                "step distances stopped contracting at the certified rate; "
                "the certificate does not hold for this kernel");
        run.distances.push_back(step);
        prev = std::move(cur);
        cur = std::move(next);
        rate_power *= abar;
        ++run.iterates;
    }

    run.certified_error = rate_power * d0 / (1.0 - abar);
    run.mu_star = std::move(cur);
    run.mu_star_v = run.mu_star.expectation(v.values());
    return run;
}

Measure exact_invariant(const Kernel& k) {
    const auto n = static_cast<Eigen::Index>(k.size());
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y)
            a(y, x) = k(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) -= 1.0;

    // One-dimensional fixed-point space: exactly one vanishing singular value.
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
    const auto& sigma = svd.singularValues();
    const double scale = std::max(sigma.size() > 0 ? sigma(0) : 0.0, 1.0);
    Eigen::Index null_dim = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) <= kNullSpaceTolerance * scale) ++null_dim;
    if (null_dim != 1)
        throw NonUniqueStationary("the fixed-point space of the transposed action is " +
                                  std::to_string(null_dim) + "-dimensional");

    Eigen::MatrixXd sys(n + 1, n);
    sys.topRows(n) = a;
    sys.bottomRows(1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs(n) = 1.0;
    Eigen::VectorXd pi = sys.colPivHouseholderQr().solve(rhs);

    std::vector<double> w(k.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        double value = pi(i);
        if (value < 0.0) {
            if (value < -1e-10) throw NonUniqueStationary("stationary solve left negative mass");
            value = 0.0;
        }
        w[static_cast<std::size_t>(i)] = value;
    }
    Measure result(std::move(w));

    const Measure pushed = k.apply_to_measure(result);
    for (std::size_t i = 0; i < k.size(); ++i)
        if (std::abs(pushed[i] - result[i]) > kStationarityTolerance)
            throw NonUniqueStationary("stationary solve residual exceeds 1e-12");
    return result;
}

double decay_constant(const ContractionCertificate& cert, const LyapunovWeight& v,
                      const Measure& mu_star) {
    if (mu_star.size() != v.size())
        throw DimensionError("measure length does not match the weight");
    const double beta = cert.beta;
    const double mean_v = mu_star.expectation(v.values());
    double worst = 0.0;
    for (std::size_t x = 0; x < v.size(); ++x)
        worst = std::max(worst, (2.0 + beta * v[x] + beta * mean_v) / (1.0 + v[x]));
    return std::max(1.0, beta) * worst;
}

std::vector<std::pair<unsigned, double>> convergence_curve(const Kernel& k,
                                                           const LyapunovWeight& v, double beta,
                                                           const Measure& mu0, unsigned n_max) {
    const Measure mu_star = exact_invariant(k);
    const BetaScale scale(beta);
    std::vector<std::pair<unsigned, double>> curve;
    curve.reserve(n_max + 1);
    Measure cur = mu0;
    for (unsigned n = 0; n <= n_max; ++n) {
        curve.emplace_back(n, rho_beta(cur, mu_star, v, scale));
        if (n < n_max) cur = k.apply_to_measure(cur);
    }
    return curve;
}

std::vector<std::complex<double>> kernel_eigenvalues(const Kernel& k) {
    const auto n = static_cast<Eigen::Index>(k.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y)
            m(x, y) = k(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out(k.size());
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

} // namespace harris

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "harris/chain.hpp"
#include "harris/metrics.hpp"

// Verification of the geometric drift condition P V <= gamma V + K, extraction
// of a minorization pair (alpha, nu) on the level set C = {V <= R} with
// R > 2K/(1-gamma), and the contraction constants
//
//   beta   = alpha0 / K                      for any alpha0 in (0, alpha),
//   gamma0 = gamma + 2K/R            (< 1),
//   gamma1 = (2 + beta R gamma0) / (2 + beta R),
//   gamma2 = max(1 - (alpha - alpha0), gamma),
//   abar   = max(gamma1, gamma2)     (< 1),
//
// under which one kernel step contracts rho_beta distances between any two
// probability measures by the factor abar.

namespace harris {

struct DriftCertificate {
    double gamma = 0.0;
    double k = 0.0;
    // Per-state gamma V(x) + K - (P V)(x); valid iff min slack >= -1e-12.
    std::vector<double> slack;
    bool valid = false;

    double min_slack() const;
};

struct MinorizationCertificate {
    double r = 0.0;
    std::vector<std::size_t> small_set; // C = {x : V(x) <= R}
    double alpha = 0.0;
    Measure nu;
    bool residual_ok = false; // P(x,y) - alpha nu(y) >= -1e-12 on C
};

struct ContractionCertificate {
    // Inputs the constants were derived from.
    double gamma = 0.0;
    double k = 0.0;
    double alpha = 0.0;
    double r = 0.0;
    // Derived contraction constants.
    double alpha0 = 0.0;
    double beta = 0.0;
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double alpha_bar = 1.0;
    // Degenerate-input notes.
    bool k_clamped = false;   // fitted K was 0, clamped to 1e-12
    bool alpha_is_one = false; // componentwise-min extraction returned alpha = 1
    bool empirically_verified = false;
};

struct ContractionReport {
    double max_dirac_ratio = 0.0;
    std::size_t dirac_pairs = 0;
    bool dirac_pass = false;
    std::size_t measure_pairs = 0;
    double max_measure_excess = 0.0; // max of rho(P mu1, P mu2) - abar rho(mu1, mu2)
    bool measure_pass = false;
    bool pass = false;
};

// Evaluates the drift inequality once; never throws on a failing inequality,
// only on out-of-range parameters.
DriftCertificate check_drift(const Kernel& k, const LyapunovWeight& v, double gamma, double K);

// Tightest K for the given gamma: max(0, max_x (P V - gamma V)).
double fit_K(const Kernel& k, const LyapunovWeight& v, double gamma);

// Componentwise row minimum over C = {V <= R}: nu = m / alpha with
// m(y) = min_{x in C} P(x,y), alpha = sum_y m(y). The maximal pair for C.
MinorizationCertificate extract_minorization(const Kernel& k, const LyapunovWeight& v, double r);

ContractionCertificate contraction_constants(double gamma, double K, double alpha, double r,
                                             double alpha0);

// Exhaustive max over x != y of rho_beta(P delta_x, P delta_y) / d_beta(x,y).
double max_dirac_ratio(const Kernel& k, const LyapunovWeight& v, BetaScale beta);

// Checks every Dirac pair and a seeded batch of random measure pairs against
// the certified rate; marks the certificate verified on success.
ContractionReport verify_pointwise_contraction(const Kernel& k, const LyapunovWeight& v,
                                               ContractionCertificate& cert,
                                               std::size_t measure_pairs = 1000);

struct CertificationResult {
    DriftCertificate drift;
    MinorizationCertificate minorization;
    ContractionCertificate contraction;
};

// Grid search: gamma in {0.05,...,0.95} step 0.05 with fitted K, R over the
// sorted distinct V values scaled by {1+1e-6, 1.25, 1.5, 2}, alpha0 in
// {alpha/4, alpha/2, 3 alpha/4}. Returns the cell minimizing alpha_bar;
// ties prefer smaller gamma, then smaller R, then larger alpha0.
CertificationResult optimize_constants(const Kernel& k, const LyapunovWeight& v);

} // namespace harris

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "harris/certify.hpp"
#include "harris/chain.hpp"

// The alternative assumption pair
//
//   P V <= gamma_tilde V + b 1_S   with V >= 1,          (drift into S)
//   P(x,.) >= alpha_tilde nu_tilde  for all x in S,      (minorization on S)
//
// does not by itself give a one-step contraction (the deterministic two-state
// flip chain satisfies it and has spectrum {-1,1}), but the Cesaro average
// Q = (1/(N+1)) sum_{k<=N} P^k does for a constructive N: with
//
//   n_star = smallest n with gamma_tilde^(-n-1)/2 >= R,
//   ell    = smallest l >= 1 with (P^(l-1) nu_tilde)(S) > 0,
//   nu     = (1/ell) sum_{k<ell} P^k nu_tilde,
//
// the choice N = n_star + 1 + ell makes Q satisfy the plain drift and
// minorization assumptions on {V <= R} for any R > 2b/(1-gamma_tilde).

namespace harris {

struct AltCertificate {
    std::vector<std::size_t> s;
    double gamma_tilde = 0.0;
    double b = 0.0;
    double alpha_tilde = 0.0;
    Measure nu_tilde;
    // Per-state gamma_tilde V(x) + b 1_S(x) - (P V)(x).
    std::vector<double> drift_slack;
    bool valid = false;
};

struct AveragingCertificate {
    unsigned n_star = 0;
    unsigned ell = 0;
    double alpha_hat = 0.0; // P^ell nu_tilde >= alpha_hat nu_tilde
    Measure nu;             // (1/ell) sum_{k<ell} P^k nu_tilde
    unsigned n = 0;         // N = n_star + 1 + ell
    double r = 0.0;
    // Advisory bound on N from tracking the proof constants; can be negative,
    // in which case the constructive N above is the binding one.
    double remark_bound = 0.0;
};

struct AveragedCertification {
    AveragingCertificate averaging;
    Kernel q;
    double gamma_q = 0.0; // (sum_{k<=N} gamma_tilde^k) / (N+1)
    DriftCertificate drift;
    MinorizationCertificate minorization;
    CertificationResult optimized;
    ContractionReport verification;
};

// Verifies the drift inequality and extracts (alpha_tilde, nu_tilde) by
// componentwise minimum over the rows in S. A failing drift inequality yields
// an invalid certificate; a vanishing row minimum throws NoMinorization.
AltCertificate check_alt(const Kernel& k, const LyapunovWeight& v,
                         const std::vector<std::size_t>& s, double gamma_tilde, double b);

// The plain drift pair implied by the alternative one: (gamma_tilde, b).
std::pair<double, double> derive_plain_from_alt(const AltCertificate& cert);

AveragingCertificate compute_averaging_N(const Kernel& k, const LyapunovWeight& v,
                                         const AltCertificate& cert, double r);

// Builds Q, checks its drift and minorization on {V <= R}, then tunes and
// verifies a contraction certificate for Q. Any failure contradicts the
// averaged-operator theorem and is surfaced as-is.
AveragedCertification certify_averaged(const Kernel& k, const LyapunovWeight& v,
                                       const AltCertificate& cert, double r);

// Default level radius for the averaging pipeline: 1.05 * 2b/(1-gamma_tilde).
double default_averaging_radius(const AltCertificate& cert);

// Proof diagnostics, exposed for the report and the test suite.
//
// Minimum over {x : V(x) <= gamma_tilde^(-n_star-1)/2} of
// sum_{k=0}^{n_star} gamma_tilde^k P^(n_star-k)(x, S); at least 1/(2b).
double iterated_drift_lower_bound(const Kernel& k, const LyapunovWeight& v,
                                  const AltCertificate& cert, unsigned n_star);

// Largest a with sum_{k=m}^{m+ell} P^k(x,.) >= a nu(.) for all x in S,
// where m = n_star + 1.
double summed_visit_lower_bound(const Kernel& k, const AltCertificate& cert,
                                const AveragingCertificate& avg);

} // namespace harris

#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "harris/certify.hpp"
#include "harris/chain.hpp"

// Certified computation of the invariant measure. With a verified contraction
// certificate (rate abar < 1 in rho_beta), the iterates mu_{k+1} = P mu_k form
// a Cauchy sequence with
//
//   rho_beta(mu_{k+1}, mu_k) <= abar^k rho_beta(mu_1, mu_0),
//
// so after n steps the geometric tail bounds the remaining distance to the
// fixed point by abar^n rho_beta(mu_1, mu_0) / (1 - abar). This a-priori bound
// is the certificate; the direct linear solve is kept alongside as an
// independent oracle.

namespace harris {

struct ConvergenceRun {
    std::size_t iterates = 0;            // n: number of kernel applications
    std::vector<double> distances;       // rho_beta(mu_{k+1}, mu_k), k = 0..n-1
    double certified_error = 0.0;        // abar^n d0 / (1 - abar)
    Measure mu_star;
    double mu_star_v = 0.0;              // integral of V against mu_star
    double beta = 0.0;
    double initial_step = 0.0;           // d0 = rho_beta(mu_1, mu_0)
};

// Iterates until the certified error drops below tol. The certificate must be
// empirically verified; step distances failing the certified rate raise
// ContractViolation.
ConvergenceRun invariant_measure(const Kernel& k, const LyapunovWeight& v,
                                 const ContractionCertificate& cert, double tol,
                                 const Measure& mu0);

// Direct stationary solve with the normalization sum(pi) = 1. Requires the
// fixed-point space of the transposed action to be one-dimensional.
Measure exact_invariant(const Kernel& k);

// Explicit constant C with ||P^n phi - mu_star(phi)|| <= C abar^n
// ||phi - mu_star(phi)|| in the plain (beta = 1) weighted norm:
// C = max(1,beta) * max_x (2 + beta V(x) + beta mu_star(V)) / (1 + V(x)).
double decay_constant(const ContractionCertificate& cert, const LyapunovWeight& v,
                      const Measure& mu_star);

// (n, rho_beta(P^n mu0, mu_star)) for n = 0..n_max against the exact solve.
std::vector<std::pair<unsigned, double>> convergence_curve(const Kernel& k,
                                                           const LyapunovWeight& v, double beta,
                                                           const Measure& mu0, unsigned n_max);

// Spectrum of the transition matrix (test oracle).
std::vector<std::complex<double>> kernel_eigenvalues(const Kernel& k);

} // namespace harris

#pragma once

#include <span>

#include "harris/chain.hpp"

// The beta-indexed weighted supremum norms
//
//   ||phi||_beta = sup_x |phi(x)| / (1 + beta V(x)),
//
// the point metric d_beta(x,y) = 2 + beta V(x) + beta V(y) (0 on the
// diagonal), the Lipschitz seminorm it induces, and the weighted total
// variation distance
//
//   rho_beta(mu1, mu2) = sum_x (1 + beta V(x)) |mu1(x) - mu2(x)|,
//
// which coincides with the dual norm over {phi : ||phi||_beta <= 1}. The
// seminorm and the norm differ only by additive constants: the shift
// c = min_x (1 + beta V(x) - phi(x)) turns any phi with seminorm <= 1 into a
// function of norm <= 1.

namespace harris {

struct BetaScale {
    explicit BetaScale(double v);
    double value;
};

double weighted_sup_norm(std::span<const double> phi, const LyapunovWeight& v, BetaScale beta);

double dbeta_point(std::size_t x, std::size_t y, const LyapunovWeight& v, BetaScale beta);

// Exhaustive maximum of |phi(x)-phi(y)| / d_beta(x,y) over pairs; 0 for n = 1.
double lipschitz_seminorm(std::span<const double> phi, const LyapunovWeight& v, BetaScale beta);

// The constant c with |phi(x)+c| <= 1 + beta V(x) for all x whenever the
// Lipschitz seminorm of phi is at most 1.
double optimal_shift(std::span<const double> phi, const LyapunovWeight& v, BetaScale beta);

double rho_beta(const Measure& mu1, const Measure& mu2, const LyapunovWeight& v, BetaScale beta);

// Same distance evaluated through the extremal test function
// phi(x) = sign(mu1(x)-mu2(x)) (1 + beta V(x)); must agree with rho_beta.
double rho_beta_dual(const Measure& mu1, const Measure& mu2, const LyapunovWeight& v,
                     BetaScale beta);

} // namespace harris

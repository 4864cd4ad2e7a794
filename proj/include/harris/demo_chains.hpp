#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harris/chain.hpp"

// Built-in chains with known certificates, used by the tests and the CLI
// demo: scheme.

namespace harris {

struct KnownAltConstants {
    std::vector<std::size_t> s;
    double gamma_tilde;
    double b;
    double alpha_tilde;
    std::vector<double> nu_tilde;
};

struct NamedExample {
    std::string name;
    StateSpace space;
    Kernel kernel;
    LyapunovWeight v;
    std::optional<KnownAltConstants> known_alt;
};

// Deterministic two-state swap P(x,.) = delta_{1-x} with V = (1,2). Satisfies
// the alternative assumptions with S = {0}, gamma_tilde = 1/2, b = 3/2,
// alpha_tilde = 1, nu_tilde = delta_1, yet has spectrum {-1,1}: no one-step
// contraction for any beta.
NamedExample flip_chain();

// Downward-biased walk on {0..size-1}: up with probability p, down with 1-p,
// boundary residual held in place. V(x) = x.
NamedExample reflected_random_walk(std::size_t size, double p);

// Midpoint discretization of X' = aX + xi, xi ~ N(0, sigma^2), on a uniform
// grid; tail mass is lumped into the boundary cells and rows renormalized.
// V(x) = 1 + x^2.
NamedExample discretized_ar1(double a, double sigma, double grid_min, double grid_max,
                             std::size_t n);

// Registry behind the CLI demo: scheme: flip, avg-flip, walk, ar1.
std::vector<std::string> demo_names();
NamedExample demo_by_name(std::string_view name);

} // namespace harris

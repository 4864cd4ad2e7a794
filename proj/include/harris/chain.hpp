#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "harris/errors.hpp"

// Finite state spaces, Lyapunov weights, probability measures and Markov
// kernels together with the two usual actions
//
//   (P phi)(x) = sum_y P(x,y) phi(y)      (on functions)
//   (P mu)(y)  = sum_x mu(x) P(x,y)       (on measures)
//
// Kernels and measures are validated and renormalized at construction so every
// downstream check can rely on exact stochasticity.

namespace harris {

class StateSpace {
public:
    explicit StateSpace(std::size_t n, std::vector<std::string> labels = {});

    std::size_t size() const { return n_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::size_t n_;
    std::vector<std::string> labels_;
};

// Nonnegative finite weight V over the states. Assumption-3 style drift
// additionally requires V >= 1; see min_value().
class LyapunovWeight {
public:
    explicit LyapunovWeight(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    double min_value() const;
    double max_value() const;

private:
    std::vector<double> values_;
};

// Probability vector. Mass must be within 1e-9 of 1 at construction and is
// stored exactly renormalized.
class Measure {
public:
    // Empty placeholder, only meaningful as a struct member awaiting assignment.
    Measure() = default;
    explicit Measure(std::vector<double> weights);

    static Measure uniform(std::size_t n);
    static Measure dirac(std::size_t n, std::size_t at);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }

    double mass_on(std::span<const std::size_t> states) const;
    double expectation(std::span<const double> phi) const;

private:
    std::vector<double> weights_;
};

// Row-stochastic transition matrix. Rows must sum to 1 within 1e-9 at
// construction and are stored exactly renormalized.
class Kernel {
public:
    explicit Kernel(std::size_t n, std::vector<double> rows);
    explicit Kernel(const std::vector<std::vector<double>>& rows);

    static Kernel identity(std::size_t n);

    std::size_t size() const { return n_; }
    double operator()(std::size_t x, std::size_t y) const { return p_[x * n_ + y]; }
    std::span<const double> row(std::size_t x) const { return {p_.data() + x * n_, n_}; }
    const std::vector<double>& data() const { return p_; }

    // (P phi)(x); length mismatch -> DimensionError.
    std::vector<double> apply_to_function(std::span<const double> phi) const;
    // (P mu)(y); mass exactly preserved.
    Measure apply_to_measure(const Measure& mu) const;
    // m-fold composition by iterated multiplication; power(0) is the identity.
    Kernel power(unsigned m) const;
    // Q = (1/(N+1)) sum_{k=0}^{N} P^k.
    Kernel cesaro_average(unsigned n_terms) const;

private:
    std::size_t n_;
    std::vector<double> p_; // row-major
};

} // namespace harris

#include "harris/chain.hpp"

#include <algorithm>
#include <cmath>

#include "harris/kernels.hpp"

namespace harris {

namespace {

constexpr double kMassTolerance = 1e-9;

void require_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw ParamError(std::string(what) + " entries must be finite");
}

} // namespace

StateSpace::StateSpace(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n_ == 0) throw ParamError("state space must contain at least one state");
    if (!labels_.empty() && labels_.size() != n_)
        throw DimensionError("label count does not match the number of states");
}

LyapunovWeight::LyapunovWeight(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw ParamError("Lyapunov weight must cover at least one state");
    require_finite(values_, "Lyapunov weight");
    for (double v : values_)
        if (v < 0.0) throw ParamError("Lyapunov weight entries must be >= 0");
}

double LyapunovWeight::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double LyapunovWeight::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

Measure::Measure(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw ParamError("measure must cover at least one state");
    require_finite(weights_, "measure");
    double mass = 0.0;
    for (double w : weights_) {
        if (w < 0.0) throw ParamError("measure weights must be >= 0");
        mass += w;
    }
    if (std::abs(mass - 1.0) > kMassTolerance)
        throw ParamError("measure mass deviates from 1 by more than 1e-9");
    for (double& w : weights_) w /= mass;
}

Measure Measure::uniform(std::size_t n) {
    if (n == 0) throw ParamError("measure must cover at least one state");
    return Measure(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Measure Measure::dirac(std::size_t n, std::size_t at) {
    if (at >= n) throw DimensionError("Dirac position out of range");
    std::vector<double> w(n, 0.0);
    w[at] = 1.0;
    return Measure(std::move(w));
}

double Measure::mass_on(std::span<const std::size_t> states) const {
    double m = 0.0;
    for (std::size_t s : states) {
        if (s >= weights_.size()) throw DimensionError("state index out of range");
        m += weights_[s];
    }
    return m;
}

double Measure::expectation(std::span<const double> phi) const {
    if (phi.size() != weights_.size())
        throw DimensionError("test function length does not match the measure");
    double acc = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) acc += weights_[i] * phi[i];
    return acc;
}

Kernel::Kernel(std::size_t n, std::vector<double> rows) : n_(n), p_(std::move(rows)) {
    if (n_ == 0) throw ParamError("kernel must cover at least one state");
    if (p_.size() != n_ * n_) throw DimensionError("kernel storage does not match n*n");
    require_finite(p_, "kernel");
    for (std::size_t x = 0; x < n_; ++x) {
        double sum = 0.0;
        for (std::size_t y = 0; y < n_; ++y) {
            const double p = p_[x * n_ + y];
            if (p < 0.0)
                throw ParamError("kernel row " + std::to_string(x) + " has a negative entry");
            sum += p;
        }
        if (std::abs(sum - 1.0) > kMassTolerance)
            throw ParamError("kernel row " + std::to_string(x) +
                             " sums to " + std::to_string(sum) + ", more than 1e-9 away from 1");
        for (std::size_t y = 0; y < n_; ++y) p_[x * n_ + y] /= sum;
    }
}

Kernel::Kernel(const std::vector<std::vector<double>>& rows)
    : Kernel(rows.size(), [&rows] {
          std::vector<double> flat;
          flat.reserve(rows.size() * rows.size());
          for (const auto& r : rows) {
              if (r.size() != rows.size())
                  throw DimensionError("kernel rows must all have length n");
              flat.insert(flat.end(), r.begin(), r.end());
          }
          return flat;
      }()) {}

Kernel Kernel::identity(std::size_t n) {
    std::vector<double> rows(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) rows[i * n + i] = 1.0;
    return Kernel(n, std::move(rows));
}

std::vector<double> Kernel::apply_to_function(std::span<const double> phi) const {
    if (phi.size() != n_)
        throw DimensionError("function length does not match the kernel");
    std::vector<double> out(n_);
    kernels::matvec(p_.data(), phi.data(), out.data(), n_);
    return out;
}

Measure Kernel::apply_to_measure(const Measure& mu) const {
    if (mu.size() != n_)
        throw DimensionError("measure length does not match the kernel");
    std::vector<double> out(n_);
    kernels::vecmat(mu.weights().data(), p_.data(), out.data(), n_);
    return Measure(std::move(out));
}

Kernel Kernel::power(unsigned m) const {
    Kernel result = identity(n_);
    std::vector<double> scratch(n_ * n_);
    for (unsigned step = 0; step < m; ++step) {
        kernels::matmul(result.p_.data(), p_.data(), scratch.data(), n_);
        result = Kernel(n_, scratch);
    }
    return result;
}

Kernel Kernel::cesaro_average(unsigned n_terms) const {
    std::vector<double> acc(n_ * n_, 0.0);
    Kernel term = identity(n_);
    std::vector<double> scratch(n_ * n_);
    for (unsigned k = 0; k <= n_terms; ++k) {
        if (k > 0) {
            kernels::matmul(term.p_.data(), p_.data(), scratch.data(), n_);
            term = Kernel(n_, scratch);
        }
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term.p_[i];
    }
    const double scale = 1.0 / (static_cast<double>(n_terms) + 1.0);
    for (double& v : acc) v *= scale;
    return Kernel(n_, std::move(acc));
}

} // namespace harris

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harris/chain.hpp"

// File ingestion for the CLI. Kernels arrive as CSV (n rows of n
// comma-separated probabilities) or JSON {"n": int, "rows": [[...]],
// "v": [...], "labels": [...]}; rows within 1e-9 of stochastic are silently
// renormalized, anything further is rejected. Malformed files raise ParseError
// with a line/column diagnostic.

namespace harris {

struct ChainInput {
    std::string source;
    StateSpace space;
    Kernel kernel;
    std::optional<LyapunovWeight> v;
    double row_sum_max_dev = 0.0; // max |row sum - 1| before renormalization
};

ChainInput load_kernel_csv(const std::string& path);
ChainInput load_kernel_json(const std::string& path);

// Dispatch: "demo:<name>" selects a built-in chain, "*.json" parses as JSON,
// anything else as CSV.
ChainInput load_chain(const std::string& spec);

// V from a file (CSV of numbers) or an inline comma-separated list.
LyapunovWeight load_weight(const std::string& path_or_inline, std::size_t n);

// "uniform", "delta:<i>", or a CSV vector file.
Measure load_start_measure(const std::string& spec, std::size_t n);

// Numbers from a CSV-ish file: comma- or newline-separated decimal values.
std::vector<double> load_numbers(const std::string& path);

} // namespace harris

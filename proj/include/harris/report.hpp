#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "harris/averaging.hpp"
#include "harris/certify.hpp"
#include "harris/solve.hpp"

// Composite result of a certification run, serialized as schema-versioned
// JSON. Serialization round-trips losslessly; the timestamp is the only field
// excluded from byte-for-byte comparisons.

namespace harris {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr char kToolName[] = "harrisctl";
inline constexpr char kToolVersion[] = "0.1.0";

struct InputDigest {
    std::string source;
    std::size_t n = 0;
    double v_min = 0.0;
    double v_max = 0.0;
    double row_sum_max_dev = 0.0;
};

struct ConvergenceSummary {
    std::size_t iterates = 0;
    double tol = 0.0;
    double certified_error = 0.0;
    double mu_star_v = 0.0;
    double initial_step = 0.0;
    std::vector<double> mu_star;
};

struct AveragedSummary {
    unsigned n = 0;
    double gamma_q = 0.0;
    double k_q = 0.0;
    double lower_bound2_min = 0.0; // min of the iterated drift sum; >= 1/(2b)
    double lower_bound2_target = 0.0;
    double summed_visit_alpha = 0.0;
};

struct HarrisReport {
    int schema_version = kReportSchemaVersion;
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string timestamp;
    InputDigest input;
    std::optional<DriftCertificate> drift;
    std::optional<MinorizationCertificate> minorization;
    std::optional<ContractionCertificate> contraction;
    std::optional<ContractionReport> verification;
    std::optional<AltCertificate> alt;
    std::optional<AveragingCertificate> averaging;
    std::optional<AveragedSummary> averaged;
    std::optional<ConvergenceSummary> convergence;
    std::map<std::string, bool> verdicts;
};

nlohmann::json to_json(const HarrisReport& report);
HarrisReport report_from_json(const nlohmann::json& j);

// Current UTC time, ISO 8601.
std::string utc_timestamp();

// Human-readable rendering for --format pretty.
std::string render_pretty(const HarrisReport& report);

} // namespace harris

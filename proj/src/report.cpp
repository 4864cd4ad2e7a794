#include "harris/report.hpp"

#include <ctime>
#include <iomanip>
#include <sstream>

namespace harris {

namespace {

using nlohmann::json;

json measure_to_json(const Measure& m) { return json(m.weights()); }

Measure measure_from_json(const json& j) {
    return Measure(j.get<std::vector<double>>());
}

json drift_to_json(const DriftCertificate& c) {
    return json{{"gamma", c.gamma}, {"k", c.k}, {"slack", c.slack}, {"valid", c.valid}};
}

DriftCertificate drift_from_json(const json& j) {
    DriftCertificate c;
    c.gamma = j.at("gamma").get<double>();
    c.k = j.at("k").get<double>();
    c.slack = j.at("slack").get<std::vector<double>>();
    c.valid = j.at("valid").get<bool>();
    return c;
}

json minor_to_json(const MinorizationCertificate& c) {
    return json{{"r", c.r},
                {"small_set", c.small_set},
                {"alpha", c.alpha},
                {"nu", measure_to_json(c.nu)},
                {"residual_ok", c.residual_ok}};
}

MinorizationCertificate minor_from_json(const json& j) {
    MinorizationCertificate c;
    c.r = j.at("r").get<double>();
    c.small_set = j.at("small_set").get<std::vector<std::size_t>>();
    c.alpha = j.at("alpha").get<double>();
    c.nu = measure_from_json(j.at("nu"));
    c.residual_ok = j.at("residual_ok").get<bool>();
    return c;
}

json contraction_to_json(const ContractionCertificate& c) {
    return json{{"gamma", c.gamma},
                {"k", c.k},
                {"alpha", c.alpha},
                {"r", c.r},
                {"alpha0", c.alpha0},
                {"beta", c.beta},
                {"gamma0", c.gamma0},
                {"gamma1", c.gamma1},
                {"gamma2", c.gamma2},
                {"alpha_bar", c.alpha_bar},
                {"k_clamped", c.k_clamped},
                {"alpha_is_one", c.alpha_is_one},
                {"empirically_verified", c.empirically_verified}};
}

ContractionCertificate contraction_from_json(const json& j) {
    ContractionCertificate c;
    c.gamma = j.at("gamma").get<double>();
    c.k = j.at("k").get<double>();
    c.alpha = j.at("alpha").get<double>();
    c.r = j.at("r").get<double>();
    c.alpha0 = j.at("alpha0").get<double>();
    c.beta = j.at("beta").get<double>();
    c.gamma0 = j.at("gamma0").get<double>();
    c.gamma1 = j.at("gamma1").get<double>();
    c.gamma2 = j.at("gamma2").get<double>();
    c.alpha_bar = j.at("alpha_bar").get<double>();
    c.k_clamped = j.at("k_clamped").get<bool>();
    c.alpha_is_one = j.at("alpha_is_one").get<bool>();
    c.empirically_verified = j.at("empirically_verified").get<bool>();
    return c;
}

json verify_to_json(const ContractionReport& r) {
    return json{{"max_dirac_ratio", r.max_dirac_ratio},
                {"dirac_pairs", r.dirac_pairs},
                {"dirac_pass", r.dirac_pass},
                {"measure_pairs", r.measure_pairs},
                {"max_measure_excess", r.max_measure_excess},
                {"measure_pass", r.measure_pass},
                {"pass", r.pass}};
}

ContractionReport verify_from_json(const json& j) {
    ContractionReport r;
    r.max_dirac_ratio = j.at("max_dirac_ratio").get<double>();
    r.dirac_pairs = j.at("dirac_pairs").get<std::size_t>();
    r.dirac_pass = j.at("dirac_pass").get<bool>();
    r.measure_pairs = j.at("measure_pairs").get<std::size_t>();
    r.max_measure_excess = j.at("max_measure_excess").get<double>();
    r.measure_pass = j.at("measure_pass").get<bool>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

json alt_to_json(const AltCertificate& c) {
    return json{{"s", c.s},
                {"gamma_tilde", c.gamma_tilde},
                {"b", c.b},
                {"alpha_tilde", c.alpha_tilde},
                {"nu_tilde", measure_to_json(c.nu_tilde)},
                {"drift_slack", c.drift_slack},
                {"valid", c.valid}};
}

AltCertificate alt_from_json(const json& j) {
    AltCertificate c;
    c.s = j.at("s").get<std::vector<std::size_t>>();
    c.gamma_tilde = j.at("gamma_tilde").get<double>();
    c.b = j.at("b").get<double>();
    c.alpha_tilde = j.at("alpha_tilde").get<double>();
    c.nu_tilde = measure_from_json(j.at("nu_tilde"));
    c.drift_slack = j.at("drift_slack").get<std::vector<double>>();
    c.valid = j.at("valid").get<bool>();
    return c;
}

json averaging_to_json(const AveragingCertificate& c) {
    return json{{"n_star", c.n_star},
                {"ell", c.ell},
                {"alpha_hat", c.alpha_hat},
                {"nu", measure_to_json(c.nu)},
                {"n", c.n},
                {"r", c.r},
                {"remark_bound", c.remark_bound},
                {"remark_bound_advisory", true}};
}

AveragingCertificate averaging_from_json(const json& j) {
    AveragingCertificate c;
    c.n_star = j.at("n_star").get<unsigned>();
    c.ell = j.at("ell").get<unsigned>();
    c.alpha_hat = j.at("alpha_hat").get<double>();
    c.nu = measure_from_json(j.at("nu"));
    c.n = j.at("n").get<unsigned>();
    c.r = j.at("r").get<double>();
    c.remark_bound = j.at("remark_bound").get<double>();
    return c;
}

json averaged_to_json(const AveragedSummary& s) {
    return json{{"n", s.n},
                {"gamma_q", s.gamma_q},
                {"k_q", s.k_q},
                {"lower_bound2_min", s.lower_bound2_min},
                {"lower_bound2_target", s.lower_bound2_target},
                {"summed_visit_alpha", s.summed_visit_alpha}};
}

AveragedSummary averaged_from_json(const json& j) {
    AveragedSummary s;
    s.n = j.at("n").get<unsigned>();
    s.gamma_q = j.at("gamma_q").get<double>();
    s.k_q = j.at("k_q").get<double>();
    s.lower_bound2_min = j.at("lower_bound2_min").get<double>();
    s.lower_bound2_target = j.at("lower_bound2_target").get<double>();
    s.summed_visit_alpha = j.at("summed_visit_alpha").get<double>();
    return s;
}

json convergence_to_json(const ConvergenceSummary& s) {
    return json{{"iterates", s.iterates},
                {"tol", s.tol},
                {"certified_error", s.certified_error},
                {"mu_star_v", s.mu_star_v},
                {"initial_step", s.initial_step},
                {"mu_star", s.mu_star}};
}

ConvergenceSummary convergence_from_json(const json& j) {
    ConvergenceSummary s;
    s.iterates = j.at("iterates").get<std::size_t>();
    s.tol = j.at("tol").get<double>();
    s.certified_error = j.at("certified_error").get<double>();
    s.mu_star_v = j.at("mu_star_v").get<double>();
    s.initial_step = j.at("initial_step").get<double>();
    s.mu_star = j.at("mu_star").get<std::vector<double>>();
    return s;
}

} // namespace

json to_json(const HarrisReport& report) {
    json j{{"schema_version", report.schema_version},
           {"tool", report.tool},
           {"version", report.version},
           {"timestamp", report.timestamp},
           {"input",
            json{{"source", report.input.source},
                 {"n", report.input.n},
                 {"v_min", report.input.v_min},
                 {"v_max", report.input.v_max},
                 {"row_sum_max_dev", report.input.row_sum_max_dev}}},
           {"verdicts", report.verdicts}};
    if (report.drift) j["drift"] = drift_to_json(*report.drift);
    if (report.minorization) j["minorization"] = minor_to_json(*report.minorization);
    if (report.contraction) j["contraction"] = contraction_to_json(*report.contraction);
    if (report.verification) j["verification"] = verify_to_json(*report.verification);
    if (report.alt) j["alt"] = alt_to_json(*report.alt);
    if (report.averaging) j["averaging"] = averaging_to_json(*report.averaging);
    if (report.averaged) j["averaged"] = averaged_to_json(*report.averaged);
    if (report.convergence) j["convergence"] = convergence_to_json(*report.convergence);
    return j;
}

HarrisReport report_from_json(const json& j) {
    HarrisReport report;
    report.schema_version = j.at("schema_version").get<int>();
    report.tool = j.at("tool").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.timestamp = j.at("timestamp").get<std::string>();
    const json& input = j.at("input");
    report.input.source = input.at("source").get<std::string>();
    report.input.n = input.at("n").get<std::size_t>();
    report.input.v_min = input.at("v_min").get<double>();
    report.input.v_max = input.at("v_max").get<double>();
    report.input.row_sum_max_dev = input.at("row_sum_max_dev").get<double>();
    report.verdicts = j.at("verdicts").get<std::map<std::string, bool>>();
    if (j.contains("drift")) report.drift = drift_from_json(j.at("drift"));
    if (j.contains("minorization")) report.minorization = minor_from_json(j.at("minorization"));
    if (j.contains("contraction"))
        report.contraction = contraction_from_json(j.at("contraction"));
    if (j.contains("verification")) report.verification = verify_from_json(j.at("verification"));
    if (j.contains("alt")) report.alt = alt_from_json(j.at("alt"));
    if (j.contains("averaging")) report.averaging = averaging_from_json(j.at("averaging"));
    if (j.contains("averaged")) report.averaged = averaged_from_json(j.at("averaged"));
    if (j.contains("convergence"))
        report.convergence = convergence_from_json(j.at("convergence"));
    return report;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::string render_pretty(const HarrisReport& report) {
    std::ostringstream out;
    out.precision(12);
    out << report.tool << " " << report.version << " - " << report.input.source << " (n = "
        << report.input.n << ", V in [" << report.input.v_min << ", " << report.input.v_max
        << "], max row-sum deviation " << report.input.row_sum_max_dev << ")\n";
    if (report.alt) {
        out << "alternative drift: gamma_tilde = " << report.alt->gamma_tilde
            << ", b = " << report.alt->b << ", |S| = " << report.alt->s.size()
            << ", alpha_tilde = " << report.alt->alpha_tilde
            << (report.alt->valid ? "  [valid]" : "  [INVALID]") << "\n";
    }
    if (report.averaging) {
        out << "averaging: n_star = " << report.averaging->n_star
            << ", ell = " << report.averaging->ell << ", N = " << report.averaging->n
            << ", R = " << report.averaging->r << ", alpha_hat = " << report.averaging->alpha_hat
            << "\n  remark bound on N (advisory): " << report.averaging->remark_bound << "\n";
    }
    if (report.averaged) {
        out << "averaged kernel: gamma_q = " << report.averaged->gamma_q
            << ", K_q = " << report.averaged->k_q << ", drift-sum lower bound "
            << report.averaged->lower_bound2_min << " >= " << report.averaged->lower_bound2_target
            << "\n";
    }
    if (report.drift) {
        out << "drift: gamma = " << report.drift->gamma << ", K = " << report.drift->k
            << ", min slack = " << report.drift->min_slack()
            << (report.drift->valid ? "  [valid]" : "  [INVALID]") << "\n";
    }
    if (report.minorization) {
        out << "minorization: R = " << report.minorization->r
            << ", |C| = " << report.minorization->small_set.size()
            << ", alpha = " << report.minorization->alpha << "\n";
    }
    if (report.contraction) {
        const auto& c = *report.contraction;
        out << "contraction: alpha0 = " << c.alpha0 << ", beta = " << c.beta
            << ", gamma0 = " << c.gamma0 << ", gamma1 = " << c.gamma1
            << ", gamma2 = " << c.gamma2 << "\n  alpha_bar = " << c.alpha_bar
            << (c.k_clamped ? "  [K fit was 0, clamped]" : "")
            << (c.alpha_is_one ? "  [alpha = 1]" : "") << "\n";
    }
    if (report.verification) {
        out << "verification: max Dirac ratio = " << report.verification->max_dirac_ratio
            << " over " << report.verification->dirac_pairs << " pairs, "
            << report.verification->measure_pairs << " measure pairs, "
            << (report.verification->pass ? "pass" : "FAIL") << "\n";
    }
    if (report.convergence) {
        out << "invariant measure: " << report.convergence->iterates
            << " iterations, certified error = " << report.convergence->certified_error
            << " (tol " << report.convergence->tol << "), mu_star(V) = "
            << report.convergence->mu_star_v << "\n";
    }
    out << "verdicts:";
    for (const auto& [name, ok] : report.verdicts) out << " " << name << "=" << (ok ? "pass" : "fail");
    out << "\n";
    return out.str();
}

} // namespace harris

// Command-line front end: ingest a kernel, certify the drift/minorization
// assumptions, compute contraction constants, solve for the invariant measure
// with a certified error bound, or run the averaged-operator pipeline.
//
// Exit codes: 0 success, 1 input or parameter error, 2 certification
// obstruction (NoFeasiblePoint, NoMinorization, Unreachable, ...).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "harris/averaging.hpp"
#include "harris/certify.hpp"
#include "harris/demo_chains.hpp"
#include "harris/io.hpp"
#include "harris/metrics.hpp"
#include "harris/report.hpp"
#include "harris/solve.hpp"

namespace {

using namespace harris;

struct CommonOptions {
    std::string kernel_spec;
    std::string v_spec;
    std::string out_path;
    std::string format = "pretty";
};

struct OverrideOptions {
    std::optional<double> gamma;
    std::optional<double> k;
    std::optional<double> r;
    std::optional<double> alpha0;
    std::optional<double> beta;
};

struct LoadedChain {
    ChainInput input;
    LyapunovWeight v;
};

LoadedChain resolve_chain(const CommonOptions& opts) {
    ChainInput input = load_chain(opts.kernel_spec);
    std::optional<LyapunovWeight> v = input.v;
    if (!opts.v_spec.empty()) v = load_weight(opts.v_spec, input.space.size());
    if (!v)
        throw ParamError("no Lyapunov weight: the input carries no 'v' and none was given");
    return LoadedChain{std::move(input), std::move(*v)};
}

HarrisReport base_report(const LoadedChain& chain) {
    HarrisReport report;
    report.timestamp = utc_timestamp();
    report.input.source = chain.input.source;
    report.input.n = chain.input.space.size();
    report.input.v_min = chain.v.min_value();
    report.input.v_max = chain.v.max_value();
    report.input.row_sum_max_dev = chain.input.row_sum_max_dev;
    return report;
}

void emit(const HarrisReport& report, const CommonOptions& opts) {
    std::string text;
    if (opts.format == "json")
        text = to_json(report).dump(2) + "\n";
    else
        text = render_pretty(report);
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw ParseError(opts.out_path + ": cannot open for writing");
        out << text;
    }
}

// Either the grid search or the fixed-constants route when overrides are set.
CertificationResult certify_chain(const Kernel& k, const LyapunovWeight& v,
                                  const OverrideOptions& fixed) {
    const bool any = fixed.gamma || fixed.k || fixed.r || fixed.alpha0 || fixed.beta;
    if (!any) return optimize_constants(k, v);

    if (!fixed.gamma || !fixed.r)
        throw ParamError("fixed-constant certification needs at least --gamma and --r");
    const double gamma = *fixed.gamma;
    double K = fixed.k ? *fixed.k : fit_K(k, v, gamma);
    bool clamped = false;
    if (K == 0.0) {
        K = 1e-12;
        clamped = true;
    }
    DriftCertificate drift = check_drift(k, v, gamma, K);
    if (!drift.valid)
        throw ParamError("drift inequality fails for the given gamma/K");
    MinorizationCertificate minor = extract_minorization(k, v, *fixed.r);
    double alpha0;
    if (fixed.alpha0)
        alpha0 = *fixed.alpha0;
    else if (fixed.beta)
        alpha0 = *fixed.beta * K;
    else
        alpha0 = minor.alpha / 2.0;
    ContractionCertificate cert = contraction_constants(gamma, K, minor.alpha, *fixed.r, alpha0);
    cert.k_clamped = clamped;
    return CertificationResult{std::move(drift), std::move(minor), std::move(cert)};
}

int run_certify(const CommonOptions& opts, const OverrideOptions& fixed) {
    LoadedChain chain = resolve_chain(opts);
    HarrisReport report = base_report(chain);

    CertificationResult result = certify_chain(chain.input.kernel, chain.v, fixed);
    ContractionReport verification =
        verify_pointwise_contraction(chain.input.kernel, chain.v, result.contraction);

    report.drift = result.drift;
    report.minorization = result.minorization;
    report.contraction = result.contraction;
    report.verification = verification;
    report.verdicts["drift"] = result.drift.valid;
    report.verdicts["minorization"] = result.minorization.alpha > 0.0;
    report.verdicts["contraction"] = result.contraction.alpha_bar < 1.0;
    report.verdicts["verified"] = verification.pass;
    emit(report, opts);
    return verification.pass ? 0 : 2;
}

int run_invariant(const CommonOptions& opts, const OverrideOptions& fixed, double tol,
                  const std::string& mu0_spec, const std::string& curve_path) {
    LoadedChain chain = resolve_chain(opts);
    HarrisReport report = base_report(chain);
    const Kernel& kernel = chain.input.kernel;

    CertificationResult result = certify_chain(kernel, chain.v, fixed);
    ContractionReport verification =
        verify_pointwise_contraction(kernel, chain.v, result.contraction);
    if (!verification.pass) {
        report.contraction = result.contraction;
        report.verification = verification;
        report.verdicts["verified"] = false;
        emit(report, opts);
        return 2;
    }

    const Measure mu0 = load_start_measure(mu0_spec, kernel.size());
    ConvergenceRun run = invariant_measure(kernel, chain.v, result.contraction, tol, mu0);

    report.drift = result.drift;
    report.minorization = result.minorization;
    report.contraction = result.contraction;
    report.verification = verification;
    report.convergence = ConvergenceSummary{run.iterates,        tol,
                                            run.certified_error, run.mu_star_v,
                                            run.initial_step,    run.mu_star.weights()};
    report.verdicts["drift"] = result.drift.valid;
    report.verdicts["minorization"] = result.minorization.alpha > 0.0;
    report.verdicts["contraction"] = result.contraction.alpha_bar < 1.0;
    report.verdicts["verified"] = true;
    report.verdicts["converged"] = run.certified_error <= tol;

    if (!curve_path.empty()) {
        // n, rho_beta(P^n mu0, mu_star), certified a-priori bound.
        const auto curve = convergence_curve(kernel, chain.v, result.contraction.beta, mu0,
                                             static_cast<unsigned>(run.iterates));
        std::ofstream out(curve_path, std::ios::binary);
        if (!out) throw ParseError(curve_path + ": cannot open for writing");
        out << "n,rho_beta_to_mustar,certified_bound\n";
        out.precision(17);
        const double abar = result.contraction.alpha_bar;
        double bound = run.initial_step / (1.0 - abar);
        for (const auto& [n, dist] : curve) {
            out << n << "," << dist << "," << bound << "\n";
            bound *= abar;
        }
    }

    emit(report, opts);
    return 0;
}

int run_alt(const CommonOptions& opts, const std::vector<std::size_t>& s, double gamma_tilde,
            double b, std::optional<double> r_opt) {
    LoadedChain chain = resolve_chain(opts);
    HarrisReport report = base_report(chain);
    const Kernel& kernel = chain.input.kernel;

    AltCertificate alt = check_alt(kernel, chain.v, s, gamma_tilde, b);
    report.alt = alt;
    report.verdicts["alt_drift"] = alt.valid;
    if (!alt.valid) {
        emit(report, opts);
        return 2;
    }

    const double r = r_opt ? *r_opt : default_averaging_radius(alt);
    AveragedCertification averaged = certify_averaged(kernel, chain.v, alt, r);

    report.averaging = averaged.averaging;
    report.averaged = AveragedSummary{
        averaged.averaging.n,
        averaged.gamma_q,
        averaged.drift.k,
        iterated_drift_lower_bound(kernel, chain.v, alt, averaged.averaging.n_star),
        1.0 / (2.0 * alt.b),
        summed_visit_lower_bound(kernel, alt, averaged.averaging)};
    report.drift = averaged.drift;
    report.minorization = averaged.minorization;
    report.contraction = averaged.optimized.contraction;
    report.verification = averaged.verification;
    report.verdicts["averaging"] = true;
    report.verdicts["drift"] = averaged.drift.valid;
    report.verdicts["minorization"] = averaged.minorization.alpha > 0.0;
    report.verdicts["contraction"] = averaged.optimized.contraction.alpha_bar < 1.0;
    report.verdicts["verified"] = averaged.verification.pass;
    emit(report, opts);
    return 0;
}

int run_demo(const std::string& name) {
    if (name.empty()) {
        for (const auto& demo : demo_names()) std::cout << demo << "\n";
        return 0;
    }
    NamedExample ex = demo_by_name(name);
    nlohmann::json j;
    j["n"] = ex.space.size();
    std::vector<std::vector<double>> rows(ex.space.size());
    for (std::size_t x = 0; x < ex.space.size(); ++x)
        rows[x].assign(ex.kernel.row(x).begin(), ex.kernel.row(x).end());
    j["rows"] = rows;
    j["v"] = ex.v.values();
    if (ex.space.has_labels()) j["labels"] = ex.space.labels();
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified geometric ergodicity for finite Markov kernels"};
    app.require_subcommand(1);

    CommonOptions common;
    OverrideOptions fixed;
    double tol = 1e-8;
    std::string mu0_spec = "uniform";
    std::string curve_path;
    std::vector<std::size_t> s_indices;
    double gamma_tilde = 0.0;
    double b = 0.0;
    std::optional<double> r_alt;
    std::string demo_name;

    const auto add_common = [&](CLI::App* cmd, bool with_overrides) {
        cmd->add_option("kernel", common.kernel_spec,
                        "kernel: CSV file, JSON file, or demo:<name>")
            ->required();
        cmd->add_option("v", common.v_spec,
                        "Lyapunov weight: file or inline comma-separated values");
        cmd->add_option("--out", common.out_path, "write the report to this file");
        cmd->add_option("--format", common.format, "json|pretty")
            ->check(CLI::IsMember({"json", "pretty"}));
        if (with_overrides) {
            cmd->add_option("--gamma", fixed.gamma, "drift rate override");
            cmd->add_option("--k", fixed.k, "drift constant override");
            cmd->add_option("--r", fixed.r, "level radius override");
            cmd->add_option("--alpha0", fixed.alpha0, "alpha0 override");
            cmd->add_option("--beta", fixed.beta, "beta override (sets alpha0 = beta K)");
        }
    };

    CLI::App* certify = app.add_subcommand("certify", "verify drift + minorization and "
                                                      "compute contraction constants");
    add_common(certify, true);

    CLI::App* invariant =
        app.add_subcommand("invariant", "certified invariant-measure computation");
    add_common(invariant, true);
    invariant->add_option("--tol", tol, "certified error target");
    invariant->add_option("--mu0", mu0_spec, "start: uniform, delta:<i>, or CSV file");
    invariant->add_option("--curve", curve_path, "write per-iterate distances as CSV");

    CLI::App* alt = app.add_subcommand("alt", "alternative assumptions and the averaged "
                                              "operator pipeline");
    add_common(alt, false);
    alt->add_option("--s", s_indices, "small-set state indices")
        ->required()
        ->delimiter(',');
    alt->add_option("--gamma-tilde", gamma_tilde, "drift rate")->required();
    alt->add_option("--b", b, "drift offset on S")->required();
    alt->add_option("--r", r_alt, "level radius (default 1.05 * 2b/(1-gamma_tilde))");

    CLI::App* demo = app.add_subcommand("demo", "list built-in chains or print one as JSON");
    demo->add_option("name", demo_name, "demo chain name");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(certify)) return run_certify(common, fixed);
        if (app.got_subcommand(invariant))
            return run_invariant(common, fixed, tol, mu0_spec, curve_path);
        if (app.got_subcommand(alt)) return run_alt(common, s_indices, gamma_tilde, b, r_alt);
        if (app.got_subcommand(demo)) return run_demo(demo_name);
    } catch (const NoFeasiblePoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoMinorization& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unreachable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SupportMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyLevelSet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

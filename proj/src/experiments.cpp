#include "kicktops/experiments.hpp"

#include "kicktops/floquet.hpp"
#include "kicktops/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kicktops {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kSumTolerance = 1e-12;
constexpr double kRegularThreshold = 0.01;
constexpr int kScalingWindowLength = 40;

std::string num(double x) { return format_number(x); }
std::string num(int x) { return std::to_string(x); }
std::string num(std::size_t x) { return std::to_string(x); }

std::vector<int> snapshot_steps(const ExperimentConfig& config, int steps)
{
    std::vector<int> out;
    if (config.snapshots.empty()) {
        for (int n = 0; n <= steps; ++n) {
            out.push_back(n);
        }
        return out;
    }
    for (int n : config.snapshots) {
        if (n <= steps) {
            out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// total() already counts the overflow mass.
double max_sum_error(const MarginalHistory& history)
{
    double worst = 0.0;
    for (const auto& series : history.distributions) {
        for (const auto& d : series) {
            worst = std::max(worst, std::abs(d.total() - 1.0));
        }
    }
    return worst;
}

InvariantCheck norm_check(const QuantumHistory& q)
{
    return {"quantum norm drift", q.max_norm_drift < kNormTolerance,
            "max |<psi|psi> - 1| = " + num(q.max_norm_drift)};
}

InvariantCheck quantum_sum_check(const QuantumHistory& q)
{
    const double err = max_sum_error(q);
    return {"quantum distribution sums", err < kSumTolerance, "max |sum p - 1| = " + num(err)};
}

InvariantCheck classical_sum_check(const ClassicalHistory& c)
{
    const double err = max_sum_error(c);
    return {"classical distribution sums", err < kSumTolerance,
            "max |sum p + overflow - 1| = " + num(err)};
}

Table moments_table(const MarginalHistory& history)
{
    Table t{"moments", {"step", "observable", "mean", "variance", "entropy"}, {}};
    for (int n = 0; n <= history.steps(); ++n) {
        for (std::size_t i = 0; i < history.observables.size(); ++i) {
            const auto& d = history.distributions[i][n];
            t.add_row({num(n), to_string(history.observables[i]), num(d.mean()), num(d.variance()),
                       num(shannon_entropy(d))});
        }
    }
    return t;
}

Table distribution_table(const MarginalHistory& history, const std::vector<int>& steps,
                         bool with_overflow)
{
    Table t{"distributions", {"step", "observable", "m", "probability"}, {}};
    if (with_overflow) {
        t.columns.push_back("overflow");
    }
    for (int n : steps) {
        for (std::size_t i = 0; i < history.observables.size(); ++i) {
            const auto& d = history.distributions[i][n];
            for (std::size_t k = 0; k < d.size(); ++k) {
                std::vector<std::string> row{num(n), to_string(history.observables[i]),
                                             num(d.label(k)), num(d.probs[k])};
                if (with_overflow) {
                    row.push_back(num(d.overflow));
                }
                t.add_row(std::move(row));
            }
        }
    }
    return t;
}

/// Uniform random point on S^2 x S^2 as degrees (θ_s, φ_s, θ_l, φ_l).
std::array<double, 4> random_angles(std::uint64_t seed, std::uint64_t index)
{
    const auto u = uniform4(seed, index, 0);
    constexpr double deg = 180.0 / M_PI;
    return {std::acos(1.0 - 2.0 * u[0]) * deg, 360.0 * u[1], std::acos(1.0 - 2.0 * u[2]) * deg,
            360.0 * u[3]};
}

double median(std::vector<double> values)
{
    if (values.empty()) {
        return NAN;
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

const std::vector<DiscreteDistribution>& MarginalHistory::of(Observable o) const
{
    for (std::size_t i = 0; i < observables.size(); ++i) {
        if (observables[i] == o) {
            return distributions[i];
        }
    }
    throw std::invalid_argument("history does not contain observable " + to_string(o));
}

int MarginalHistory::steps() const
{
    return distributions.empty() ? -1 : static_cast<int>(distributions.front().size()) - 1;
}

QuantumState initial_quantum_state(const ExperimentConfig& config)
{
    return product_state(coherent_state(config.s, config.theta_s(), config.phi_s()),
                         coherent_state(config.l, config.theta_l(), config.phi_l()));
}

Ensemble initial_ensemble(const ExperimentConfig& config, std::size_t count)
{
    const SpinMagnitudes mags = SpinMagnitudes::from_quantum(config.s, config.l);
    return sample_ensemble(ClassicalDensityParams::matched(config.theta_s(), config.phi_s(), mags.S),
                           ClassicalDensityParams::matched(config.theta_l(), config.phi_l(), mags.L),
                           count, config.seed, mags);
}

QuantumHistory quantum_history(const ExperimentConfig& config,
                               const std::vector<Observable>& observables)
{
    config.validate();
    const FloquetOperatorPlan plan = build_plan(config.s, config.l, config.params);
    QuantumState state = initial_quantum_state(config);

    QuantumHistory out;
    out.observables = observables;
    out.distributions.resize(observables.size());
    auto record = [&] {
        for (std::size_t i = 0; i < observables.size(); ++i) {
            out.distributions[i].push_back(observables[i] == Observable::Lx
                                               ? quantum_plx(state, plan.xl)
                                               : quantum_marginal(state, observables[i]));
        }
        out.max_norm_drift =
            std::max(out.max_norm_drift, std::abs(state.amps.squaredNorm() - 1.0));
    };
    record();
    for (int n = 1; n <= config.steps; ++n) {
        apply_step_inplace(state, plan);
        record();
    }
    return out;
}

ClassicalHistory classical_history(const ExperimentConfig& config,
                                   const std::vector<Observable>& observables, std::size_t count)
{
    config.validate();
    Ensemble ensemble = initial_ensemble(config, count);

    ClassicalHistory out;
    out.observables = observables;
    out.ensemble_size = count;
    out.distributions.resize(observables.size());
    auto record = [&] {
        for (std::size_t i = 0; i < observables.size(); ++i) {
            out.distributions[i].push_back(classical_marginal(
                ensemble, observables[i], label_range(observables[i], config.s, config.l)));
        }
    };
    record();
    for (int n = 1; n <= config.steps; ++n) {
        evolve_ensemble_inplace(ensemble, config.params, 1);
        record();
    }
    return out;
}

ComparisonSeries compare_series(const QuantumHistory& q, const ClassicalHistory& c, Observable o,
                                const ExperimentConfig& config)
{
    const auto& pq = q.of(o);
    const auto& pc = c.of(o);
    if (pq.size() != pc.size()) {
        throw std::invalid_argument("compare_series: histories differ in length");
    }
    ComparisonSeries out;
    out.observable = o;
    out.h_mc = shannon_entropy(microcanonical_marginal(o, config.s, config.l));
    for (std::size_t n = 0; n < pq.size(); ++n) {
        const QCDifference diff = qc_difference(pq[n], pc[n]);
        out.steps.push_back(static_cast<int>(n));
        out.h_q.push_back(shannon_entropy(pq[n]));
        out.h_c.push_back(shannon_entropy(pc[n]));
        out.sigma_qc.push_back(diff.sigma_qc);
        out.relative_sigma.push_back(diff.relative_sigma);
        out.overflow.push_back(pc[n].overflow);
    }
    return out;
}

EquilibriumWindow auto_window(const ExperimentConfig& config, int steps)
{
    const PhasePoint p0 = PhasePoint::from_angles(config.theta_s(), config.phi_s(),
                                                  config.theta_l(), config.phi_l());
    const double lambda = lyapunov(p0, config.params, SpinMagnitudes::from_ratio(config.params.r),
                                   {config.lyapunov_steps, config.transient});
    EquilibriumWindow w{steps / 2, steps, 0.0};
    if (lambda > kRegularThreshold) {
        w.t_rel = relaxation_estimate(lambda, lambda, std::max(config.l.value(), 1.0)).t_rel;
        const int first = static_cast<int>(std::ceil(2.0 * w.t_rel));
        if (first < steps) {
            w.first = first;
        }
    }
    return w;
}

bool RunOutput::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

Header RunOutput::header(const ExperimentConfig& config) const
{
    Header h{{"kicktops", kVersion}, {"command", command}};
    for (const auto& kv : config.describe()) {
        h.push_back(kv);
    }
    for (const auto& kv : notes) {
        h.push_back(kv);
    }
    for (const auto& c : checks) {
        h.emplace_back("check " + c.name, std::string(c.passed ? "pass" : "FAIL") + " (" + c.detail + ")");
    }
    return h;
}

RunOutput run_quantum(const ExperimentConfig& config)
{
    const QuantumHistory q = quantum_history(config, config.observables);
    RunOutput out{"quantum", {}, {norm_check(q), quantum_sum_check(q)}, {}};
    out.tables.push_back(distribution_table(q, snapshot_steps(config, config.steps), false));
    out.tables.push_back(moments_table(q));
    return out;
}

RunOutput run_classical(const ExperimentConfig& config)
{
    const ClassicalHistory c = classical_history(config, config.observables, config.ensemble);
    RunOutput out{"classical", {}, {classical_sum_check(c)}, {}};
    out.tables.push_back(distribution_table(c, snapshot_steps(config, config.steps), true));
    out.tables.push_back(moments_table(c));
    return out;
}

RunOutput run_compare(const ExperimentConfig& config)
{
    const QuantumHistory q = quantum_history(config, config.observables);
    const ClassicalHistory c = classical_history(config, config.observables, config.ensemble);
    RunOutput out{"compare", {}, {norm_check(q), quantum_sum_check(q), classical_sum_check(c)}, {}};

    EquilibriumWindow window;
    if (config.window) {
        if (config.window->second > config.steps) {
            throw std::invalid_argument("window ends after the last step");
        }
        window = {config.window->first, config.window->second, 0.0};
    } else {
        window = auto_window(config, config.steps);
    }

    Table series{"series",
                 {"step", "observable", "h_q", "h_c", "h_mc", "sigma_qc", "relative_sigma",
                  "overflow"},
                 {}};
    Table differences{"differences", {"step", "observable", "m", "p_q", "p_c", "difference"}, {}};
    Table equilibrium{"equilibrium",
                      {"observable", "window_first", "window_last", "t_rel", "sigma_qc",
                       "relative_sigma", "warning"},
                      {}};
    const std::vector<int> snapshots = snapshot_steps(config, config.steps);
    std::vector<ComparisonSeries> all;
    for (Observable o : config.observables) {
        all.push_back(compare_series(q, c, o, config));
    }
    for (int n = 0; n <= config.steps; ++n) {
        for (const auto& cs : all) {
            series.add_row({num(n), to_string(cs.observable), num(cs.h_q[n]), num(cs.h_c[n]),
                            num(cs.h_mc), num(cs.sigma_qc[n]), num(cs.relative_sigma[n]),
                            num(cs.overflow[n])});
        }
    }
    for (int n : snapshots) {
        for (Observable o : config.observables) {
            const auto& pq = q.of(o)[n];
            const auto& pc = c.of(o)[n];
            for (std::size_t k = 0; k < pq.size(); ++k) {
                differences.add_row({num(n), to_string(o), num(pq.label(k)), num(pq.probs[k]),
                                     num(pc.probs[k]), num(pq.probs[k] - pc.probs[k])});
            }
        }
    }
    for (const auto& cs : all) {
        const ScalingRecord abs_rec = equilibrium_sigma({cs.steps, cs.sigma_qc}, window.first,
                                                        window.last, config.l.value(), window.t_rel);
        const ScalingRecord rel_rec = equilibrium_sigma({cs.steps, cs.relative_sigma}, window.first,
                                                        window.last, config.l.value(), window.t_rel);
        equilibrium.add_row({to_string(cs.observable), num(window.first), num(window.last),
                             num(window.t_rel), num(abs_rec.sigma), num(rel_rec.sigma),
                             abs_rec.warning});
    }
    out.tables.push_back(std::move(series));
    out.tables.push_back(std::move(differences));
    out.tables.push_back(std::move(equilibrium));
    return out;
}

RunOutput run_lyapunov(const ExperimentConfig& config)
{
    config.validate();
    std::vector<std::array<double, 4>> angles{config.angles_deg};
    for (int k = 0; k < config.grid; ++k) {
        angles.push_back(random_angles(config.seed, static_cast<std::uint64_t>(k)));
    }
    const SpinMagnitudes mags = SpinMagnitudes::from_ratio(config.params.r);
    const LyapunovOptions options{config.lyapunov_steps, config.transient};
    std::vector<double> lambdas(angles.size());
    const long count = static_cast<long>(angles.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
        constexpr double rad = M_PI / 180.0;
        const auto& a = angles[k];
        lambdas[k] = lyapunov(PhasePoint::from_angles(a[0] * rad, a[1] * rad, a[2] * rad, a[3] * rad),
                              config.params, mags, options);
    }

    RunOutput out{"lyapunov", {}, {}, {}};
    Table t{"lyapunov", {"theta_s", "phi_s", "theta_l", "phi_l", "lambda"}, {}};
    bool finite = true;
    std::vector<double> chaotic;
    int regular = 0;
    for (std::size_t k = 0; k < angles.size(); ++k) {
        t.add_row({num(angles[k][0]), num(angles[k][1]), num(angles[k][2]), num(angles[k][3]),
                   num(lambdas[k])});
        finite = finite && std::isfinite(lambdas[k]);
        if (lambdas[k] < kRegularThreshold) {
            ++regular;
        } else {
            chaotic.push_back(lambdas[k]);
        }
    }
    out.tables.push_back(std::move(t));
    out.checks.push_back({"finite exponents", finite, num(angles.size()) + " initial conditions"});
    out.notes.emplace_back("regular fraction (lambda < 0.01)",
                           num(static_cast<double>(regular) / static_cast<double>(angles.size())));
    out.notes.emplace_back("median chaotic lambda", num(median(chaotic)));
    return out;
}

RunOutput run_scaling(const ExperimentConfig& config)
{
    config.validate();
    if (config.sizes.size() < 3) {
        throw std::invalid_argument("scaling needs at least 3 sizes");
    }
    RunOutput out{"scaling", {}, {}, {}};
    Table records{"records",
                  {"l", "s", "dimension", "ensemble", "window_first", "window_last", "t_rel",
                   "sigma_pure", "sigma_reduced", "relative_sigma_pure", "relative_sigma_reduced",
                   "warning"},
                  {}};
    std::vector<ScalingRecord> pure, reduced;
    for (int size : config.sizes) {
        ExperimentConfig run = config;
        run.l = SpinMagnitude(2 * size);
        run.s = SpinMagnitude(2 * static_cast<int>(std::lround(size / config.params.r)));
        const std::size_t dim = static_cast<std::size_t>(run.s.dim()) * run.l.dim();

        if (config.synthetic) {
            const double sigma = *config.synthetic / std::sqrt(static_cast<double>(size));
            pure.push_back({static_cast<double>(size), sigma, 0, 0, {}});
            reduced.push_back(pure.back());
            records.add_row({num(size), num(run.s.value()), num(dim), "0", "0", "0", "0",
                             num(sigma), num(sigma), num(sigma), num(sigma), "synthetic"});
            continue;
        }

        EquilibriumWindow window;
        if (config.window) {
            window = {config.window->first, config.window->second, 0.0};
        } else {
            // Window placed after twice the relaxation estimate; a long run is cheap at these sizes.
            const EquilibriumWindow probe = auto_window(run, 1 << 20);
            window.t_rel = probe.t_rel;
            window.first = std::max(10, static_cast<int>(std::ceil(2.0 * probe.t_rel)));
            window.last = window.first + kScalingWindowLength;
        }
        run.steps = window.last;
        run.ensemble = std::max(config.ensemble, 25 * dim);
        run.observables = {Observable::Jz, Observable::Lz};

        const QuantumHistory q = quantum_history(run, run.observables);
        const ClassicalHistory c = classical_history(run, run.observables, run.ensemble);
        for (auto check : {norm_check(q), quantum_sum_check(q), classical_sum_check(c)}) {
            check.name += " l=" + num(size);
            out.checks.push_back(std::move(check));
        }
        const ComparisonSeries jz = compare_series(q, c, Observable::Jz, run);
        const ComparisonSeries lz = compare_series(q, c, Observable::Lz, run);
        const double l_value = static_cast<double>(size);
        const ScalingRecord p_abs =
            equilibrium_sigma({jz.steps, jz.sigma_qc}, window.first, window.last, l_value, window.t_rel);
        const ScalingRecord r_abs =
            equilibrium_sigma({lz.steps, lz.sigma_qc}, window.first, window.last, l_value, window.t_rel);
        const ScalingRecord p_rel = equilibrium_sigma({jz.steps, jz.relative_sigma}, window.first,
                                                      window.last, l_value, window.t_rel);
        const ScalingRecord r_rel = equilibrium_sigma({lz.steps, lz.relative_sigma}, window.first,
                                                      window.last, l_value, window.t_rel);
        pure.push_back(p_rel);
        reduced.push_back(r_rel);
        records.add_row({num(size), num(run.s.value()), num(dim), num(run.ensemble),
                         num(window.first), num(window.last), num(window.t_rel), num(p_abs.sigma),
                         num(r_abs.sigma), num(p_rel.sigma), num(r_rel.sigma), p_rel.warning});
    }

    Table fit{"fit", {"variant", "slope", "intercept"}, {}};
    const LinearFit pure_fit = scaling_fit(pure);
    const LinearFit reduced_fit = scaling_fit(reduced);
    fit.add_row({"pure", num(pure_fit.slope), num(pure_fit.intercept)});
    fit.add_row({"reduced", num(reduced_fit.slope), num(reduced_fit.intercept)});
    out.notes.emplace_back("slope pure", num(pure_fit.slope));
    out.notes.emplace_back("slope reduced", num(reduced_fit.slope));
    out.tables.push_back(std::move(records));
    out.tables.push_back(std::move(fit));
    return out;
}

RunOutput run_microcanonical(const ExperimentConfig& config)
{
    config.validate();
    RunOutput out{"microcanonical", {}, {}, {}};
    Table dist{"distributions", {"observable", "m", "probability"}, {}};
    Table entropies{"entropies", {"observable", "entropy", "log_bins"}, {}};
    double worst = 0.0;
    for (Observable o : {Observable::Lz, Observable::Jz}) {
        const DiscreteDistribution d = microcanonical_marginal(o, config.s, config.l);
        for (std::size_t k = 0; k < d.size(); ++k) {
            dist.add_row({to_string(o), num(d.label(k)), num(d.probs[k])});
        }
        entropies.add_row({to_string(o), num(shannon_entropy(d)),
                           num(std::log(static_cast<double>(d.size())))});
        worst = std::max(worst, std::abs(d.total() - 1.0));
    }
    out.checks.push_back({"microcanonical sums", worst < kSumTolerance, "max |sum p - 1| = " + num(worst)});
    out.tables.push_back(std::move(dist));
    out.tables.push_back(std::move(entropies));
    return out;
}

RunOutput run_command(const std::string& command, const ExperimentConfig& config)
{
    if (command == "quantum") return run_quantum(config);
    if (command == "classical") return run_classical(config);
    if (command == "compare") return run_compare(config);
    if (command == "lyapunov") return run_lyapunov(config);
    if (command == "scaling") return run_scaling(config);
    if (command == "microcanonical") return run_microcanonical(config);
    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace kicktops

#pragma once

#include "kicktops/analysis.hpp"
#include "kicktops/classical.hpp"
#include "kicktops/config.hpp"
#include "kicktops/csv.hpp"
#include "kicktops/marginals.hpp"
#include "kicktops/quantum_states.hpp"

#include <string>
#include <vector>

namespace kicktops {

/// Per-step marginals of a run: distributions[i][n] is observable i at step n,
/// n = 0..steps.
struct MarginalHistory {
    std::vector<Observable> observables;
    std::vector<std::vector<DiscreteDistribution>> distributions;

    const std::vector<DiscreteDistribution>& of(Observable o) const;
    int steps() const;
};

struct QuantumHistory : MarginalHistory {
    /// max over steps of |<psi|psi> - 1|
    double max_norm_drift = 0.0;
};

struct ClassicalHistory : MarginalHistory {
    std::size_t ensemble_size = 0;
};

/// Product of the two coherent states at the configured angles.
QuantumState initial_quantum_state(const ExperimentConfig& config);

/// Matched Gaussian ensemble with magnitudes sqrt(j(j+1)) of the configured spins.
Ensemble initial_ensemble(const ExperimentConfig& config, std::size_t count);

QuantumHistory quantum_history(const ExperimentConfig& config,
                               const std::vector<Observable>& observables);
ClassicalHistory classical_history(const ExperimentConfig& config,
                                   const std::vector<Observable>& observables,
                                   std::size_t count);

/// Per-step comparison of one observable.
struct ComparisonSeries {
    Observable observable = Observable::Jz;
    std::vector<int> steps;
    std::vector<double> h_q;
    std::vector<double> h_c;
    std::vector<double> sigma_qc;
    std::vector<double> relative_sigma;
    std::vector<double> overflow;
    double h_mc = 0.0;
};

ComparisonSeries compare_series(const QuantumHistory& q, const ClassicalHistory& c,
                                Observable o, const ExperimentConfig& config);

struct EquilibriumWindow {
    int first = 0;
    int last = 0;
    /// Relaxation-time estimate the window was derived from; 0 if unknown.
    double t_rel = 0.0;
};

/// Automatic window start ceil(2 t_rel) with λ_w = λ_L taken from the
/// classical exponent of the configured initial condition. Falls back to
/// steps / 2 when the trajectory is regular or the run is too short.
EquilibriumWindow auto_window(const ExperimentConfig& config, int steps);

/// Result of one subcommand.
struct InvariantCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct RunOutput {
    std::string command;
    std::vector<Table> tables;
    std::vector<InvariantCheck> checks;
    /// Extra summary lines (fitted slopes, cluster statistics) for the header.
    std::vector<std::pair<std::string, std::string>> notes;

    bool ok() const;
    /// Manifest: command, version, config echo, notes and check results.
    Header header(const ExperimentConfig& config) const;
};

RunOutput run_quantum(const ExperimentConfig& config);
RunOutput run_classical(const ExperimentConfig& config);
RunOutput run_compare(const ExperimentConfig& config);
RunOutput run_lyapunov(const ExperimentConfig& config);
RunOutput run_scaling(const ExperimentConfig& config);
RunOutput run_microcanonical(const ExperimentConfig& config);

/// Dispatch by subcommand name; throws std::invalid_argument for unknown names.
RunOutput run_command(const std::string& command, const ExperimentConfig& config);

}  // namespace kicktops

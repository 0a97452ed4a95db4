#pragma once

#include "kicktops/floquet.hpp"
#include "kicktops/marginals.hpp"
#include "kicktops/spin_algebra.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kicktops {

inline constexpr const char* kVersion = "0.1.0";

/// Everything one experiment needs. Angles are in degrees, as on the command
/// line; the engines receive radians.
struct ExperimentConfig {
    SpinMagnitude s{40};
    SpinMagnitude l{44};
    FloquetParams params{5.0, 1.1, 2.835};
    /// (θ_s, φ_s, θ_l, φ_l)
    std::array<double, 4> angles_deg{20.0, 40.0, 160.0, 130.0};
    int steps = 50;
    std::size_t ensemble = 100000;
    std::uint64_t seed = 1;
    /// Observables whose distributions are written; "all" selects every one.
    std::vector<Observable> observables{Observable::Jz};
    /// Steps at which full distributions are written; empty means every step.
    std::vector<int> snapshots;
    /// Equilibrium window [first, last]; unset means chosen from the relaxation estimate.
    std::optional<std::pair<int, int>> window;
    /// Number of random initial conditions for the Lyapunov scan.
    int grid = 0;
    int lyapunov_steps = 10000;
    int transient = 100;
    /// System sizes l for the scaling sweep; s = round(l / r).
    std::vector<int> sizes{11, 22, 44};
    /// Scaling test hook: replaces simulation by sigma = c * l^(-1/2).
    std::optional<double> synthetic;

    void validate() const;
    /// (key, value) pairs in a fixed order, values formatted so that feeding
    /// them back through apply_setting reproduces the config.
    std::vector<std::pair<std::string, std::string>> describe() const;

    double theta_s() const;
    double phi_s() const;
    double theta_l() const;
    double phi_l() const;
};

/// Named presets: "ci" (s=20, l=22) and "paper" (s=140, l=154).
void apply_preset(ExperimentConfig& config, const std::string& name);

/// Sets one key; keys are the long flag names without dashes
/// (s, l, a, r, gamma, theta-s, ..., window, preset). Throws on unknown keys
/// or malformed values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Flat key=value text, one key per line, '#' starts a comment.
void apply_config_text(ExperimentConfig& config, const std::string& text);
void apply_config_file(ExperimentConfig& config, const std::string& path);

std::vector<int> parse_int_list(const std::string& text);
/// Comma list of lz, jz, lx, or "all".
std::vector<Observable> parse_observable_list(const std::string& text);

}  // namespace kicktops

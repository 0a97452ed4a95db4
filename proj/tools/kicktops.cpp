// Command-line runner for the kicked coupled-top experiments.
#include "kicktops/config.hpp"
#include "kicktops/csv.hpp"
#include "kicktops/experiments.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

// Flag names equal config keys, so file and command line share one parser.
const std::vector<std::pair<std::string, std::string>> kFlags{
    {"s", "spin quantum number s (integer or half-integer)"},
    {"l", "spin quantum number l (integer or half-integer)"},
    {"a", "free precession angle per period"},
    {"r", "magnitude ratio |L|/|S| for classical-only runs"},
    {"gamma", "coupling strength"},
    {"theta-s", "polar angle of S, degrees"},
    {"phi-s", "azimuth of S, degrees"},
    {"theta-l", "polar angle of L, degrees"},
    {"phi-l", "azimuth of L, degrees"},
    {"steps", "number of map periods"},
    {"ensemble", "classical ensemble size"},
    {"seed", "random seed"},
    {"snapshots", "comma list of steps whose distributions are written (default: all)"},
    {"observable", "comma list of lz, jz, lx, or all"},
    {"window", "equilibrium window n1:n2"},
    {"grid", "number of random initial conditions (lyapunov)"},
    {"lyapunov-steps", "map steps per Lyapunov estimate"},
    {"transient", "discarded steps before Lyapunov accumulation"},
    {"sizes", "comma list of l values (scaling)"},
    {"synthetic", "scaling test hook: sigma = c l^(-1/2), no simulation"},
};

struct CommandLine {
    std::string config_path;
    std::string out_path;
    std::string preset;
    std::map<std::string, std::string> values;
};

void add_common(CLI::App* cmd, CommandLine& cl)
{
    cmd->add_option("--config", cl.config_path, "key=value configuration file");
    cmd->add_option("--out", cl.out_path, "output CSV path (default: stdout)");
    cmd->add_option("--preset", cl.preset, "named size preset")->check(CLI::IsMember({"ci", "paper"}));
    for (const auto& [key, help] : kFlags) {
        cmd->add_option("--" + key, cl.values[key], help);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum and classical kicked coupled tops"};
    app.set_version_flag("--version", kicktops::kVersion);
    app.require_subcommand(1);

    CommandLine cl;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"quantum", "quantum marginal distributions and moments"},
        {"classical", "classical ensemble histograms and moments"},
        {"compare", "quantum vs classical entropies and differences"},
        {"lyapunov", "largest Lyapunov exponent per initial condition"},
        {"scaling", "equilibrium quantum-classical differences vs system size"},
        {"microcanonical", "analytic microcanonical laws and entropies"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, help] : commands) {
        subs[name] = app.add_subcommand(name, help);
        add_common(subs[name], cl);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string command;
    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) {
            command = name;
        }
    }

    kicktops::ExperimentConfig config;
    try {
        if (!cl.config_path.empty()) {
            kicktops::apply_config_file(config, cl.config_path);
        }
        if (!cl.preset.empty()) {
            kicktops::apply_preset(config, cl.preset);
        }
        for (const auto& [key, help] : kFlags) {
            if (subs[command]->get_option("--" + key)->count() > 0) {
                kicktops::apply_setting(config, key, cl.values[key]);
            }
        }
        config.validate();
    } catch (const std::exception& e) {
        std::cerr << "kicktops: invalid configuration: " << e.what() << '\n';
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    kicktops::RunOutput result;
    try {
        result = kicktops::run_command(command, config);
        const kicktops::Header header = result.header(config);
        if (cl.out_path.empty() || cl.out_path == "-") {
            kicktops::write_tables(std::cout, header, result.tables);
        } else {
            for (const auto& path : kicktops::write_tables(cl.out_path, header, result.tables)) {
                std::cerr << "wrote " << path.string() << '\n';
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "kicktops " << command << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "kicktops " << command << ": " << e.what() << '\n';
        return 3;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "# wall_time_seconds=" << seconds << '\n';

    for (const auto& check : result.checks) {
        if (!check.passed) {
            std::cerr << "kicktops " << command << ": check failed: " << check.name << " ("
                      << check.detail << ")\n";
        }
    }
    return result.ok() ? 0 : 1;
}

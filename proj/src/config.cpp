#include "kicktops/config.hpp"

#include "kicktops/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kicktops {

namespace {

constexpr double kDegree = M_PI / 180.0;

std::string trim(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) {
        throw std::invalid_argument("'" + key + "' expects a number, got '" + value + "'");
    }
    return out;
}

long long parse_integer(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) {
        throw std::invalid_argument("'" + key + "' expects an integer, got '" + value + "'");
    }
    return out;
}

std::string join(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? "," : "") + std::to_string(values[k]);
    }
    return out;
}

std::string join_observables(const std::vector<Observable>& values)
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? "," : "") + to_string(values[k]);
    }
    return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(static_cast<int>(parse_integer("list", item)));
        }
    }
    return out;
}

std::vector<Observable> parse_observable_list(const std::string& text)
{
    if (trim(text) == "all") {
        return {Observable::Lz, Observable::Jz, Observable::Lx};
    }
    std::vector<Observable> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        const Observable o = parse_observable(item);
        if (std::find(out.begin(), out.end(), o) == out.end()) {
            out.push_back(o);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("observable list is empty");
    }
    return out;
}

double ExperimentConfig::theta_s() const { return angles_deg[0] * kDegree; }
double ExperimentConfig::phi_s() const { return angles_deg[1] * kDegree; }
double ExperimentConfig::theta_l() const { return angles_deg[2] * kDegree; }
double ExperimentConfig::phi_l() const { return angles_deg[3] * kDegree; }

void ExperimentConfig::validate() const
{
    params.validate();
    for (double angle : angles_deg) {
        if (!(angle >= 0.0 && angle < 360.0)) {
            throw std::invalid_argument("angles must lie in [0, 360) degrees");
        }
    }
    if (angles_deg[0] > 180.0 || angles_deg[2] > 180.0) {
        throw std::invalid_argument("polar angles theta-s and theta-l must lie in [0, 180] degrees");
    }
    if (steps < 0) {
        throw std::invalid_argument("steps must be non-negative");
    }
    if (ensemble < 1) {
        throw std::invalid_argument("ensemble must be at least 1");
    }
    for (int n : snapshots) {
        if (n < 0) {
            throw std::invalid_argument("snapshot steps must be non-negative");
        }
    }
    if (window && (window->first < 0 || window->second < window->first)) {
        throw std::invalid_argument("window must satisfy 0 <= n1 <= n2");
    }
    if (grid < 0) {
        throw std::invalid_argument("grid must be non-negative");
    }
    if (lyapunov_steps < 1000) {
        throw std::invalid_argument("lyapunov-steps must be at least 1000");
    }
    if (transient < 0) {
        throw std::invalid_argument("transient must be non-negative");
    }
    for (int size : sizes) {
        if (size < 1) {
            throw std::invalid_argument("sizes must be positive");
        }
    }
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::describe() const
{
    std::vector<std::pair<std::string, std::string>> out{
        {"s", format_number(s.value())},
        {"l", format_number(l.value())},
        {"a", format_number(params.a)},
        {"r", format_number(params.r)},
        {"gamma", format_number(params.gamma)},
        {"theta-s", format_number(angles_deg[0])},
        {"phi-s", format_number(angles_deg[1])},
        {"theta-l", format_number(angles_deg[2])},
        {"phi-l", format_number(angles_deg[3])},
        {"steps", std::to_string(steps)},
        {"ensemble", std::to_string(ensemble)},
        {"seed", std::to_string(seed)},
        {"observable", join_observables(observables)},
        {"snapshots", join(snapshots)},
        {"window", window ? std::to_string(window->first) + ":" + std::to_string(window->second) : ""},
        {"grid", std::to_string(grid)},
        {"lyapunov-steps", std::to_string(lyapunov_steps)},
        {"transient", std::to_string(transient)},
        {"sizes", join(sizes)},
    };
    if (synthetic) {
        out.emplace_back("synthetic", format_number(*synthetic));
    }
    return out;
}

void apply_preset(ExperimentConfig& config, const std::string& name)
{
    if (name == "ci") {
        config.s = SpinMagnitude(40);
        config.l = SpinMagnitude(44);
    } else if (name == "paper") {
        config.s = SpinMagnitude(280);
        config.l = SpinMagnitude(308);
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (expected ci or paper)");
    }
}

void apply_setting(ExperimentConfig& config, const std::string& raw_key, const std::string& raw_value)
{
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key == "preset") {
        apply_preset(config, value);
    } else if (key == "s") {
        config.s = SpinMagnitude::from_value(parse_double(key, value));
    } else if (key == "l") {
        config.l = SpinMagnitude::from_value(parse_double(key, value));
    } else if (key == "a") {
        config.params.a = parse_double(key, value);
    } else if (key == "r") {
        config.params.r = parse_double(key, value);
    } else if (key == "gamma") {
        config.params.gamma = parse_double(key, value);
    } else if (key == "theta-s") {
        config.angles_deg[0] = parse_double(key, value);
    } else if (key == "phi-s") {
        config.angles_deg[1] = parse_double(key, value);
    } else if (key == "theta-l") {
        config.angles_deg[2] = parse_double(key, value);
    } else if (key == "phi-l") {
        config.angles_deg[3] = parse_double(key, value);
    } else if (key == "steps") {
        config.steps = static_cast<int>(parse_integer(key, value));
    } else if (key == "ensemble") {
        const long long n = parse_integer(key, value);
        if (n < 1) {
            throw std::invalid_argument("ensemble must be at least 1");
        }
        config.ensemble = static_cast<std::size_t>(n);
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    } else if (key == "observable") {
        config.observables = parse_observable_list(value);
    } else if (key == "snapshots") {
        config.snapshots = parse_int_list(value);
    } else if (key == "window") {
        if (value.empty()) {
            config.window.reset();
            return;
        }
        const auto colon = value.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("window expects n1:n2, got '" + value + "'");
        }
        config.window = std::pair<int, int>{
            static_cast<int>(parse_integer(key, trim(value.substr(0, colon)))),
            static_cast<int>(parse_integer(key, trim(value.substr(colon + 1))))};
    } else if (key == "grid") {
        config.grid = static_cast<int>(parse_integer(key, value));
    } else if (key == "lyapunov-steps") {
        config.lyapunov_steps = static_cast<int>(parse_integer(key, value));
    } else if (key == "transient") {
        config.transient = static_cast<int>(parse_integer(key, value));
    } else if (key == "sizes") {
        config.sizes = parse_int_list(value);
    } else if (key == "synthetic") {
        config.synthetic = parse_double(key, value);
    } else {
        throw std::invalid_argument("unknown configuration key '" + key + "'");
    }
}

void apply_config_text(ExperimentConfig& config, const std::string& text)
{
    std::stringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(number) +
                                        ": expected key=value");
        }
        try {
            apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
        }
    }
}

void apply_config_file(ExperimentConfig& config, const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    apply_config_text(config, buffer.str());
}

}  // namespace kicktops

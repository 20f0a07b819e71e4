#include "gfpc/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gfpc {
namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kPi = 3.141592653589793;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != v.size()) throw std::invalid_argument("config: bad number for " + key);
    return x;
}

int to_int(const std::string& key, const std::string& v) {
    const double x = to_double(key, v);
    const int i = static_cast<int>(x);
    if (i != x) throw std::invalid_argument("config: expected integer for " + key);
    return i;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config: bad bool for " + key);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

template <typename T, typename F>
void fill_axes(const std::string& key, const std::string& v, std::array<T, 3>& dst, F conv) {
    auto items = split_list(v);
    if (items.empty() || items.size() > 3)
        throw std::invalid_argument("config: " + key + " wants 1-3 comma-separated values");
    for (std::size_t a = 0; a < 3; ++a)
        dst[a] = conv(key, items[a < items.size() ? a : items.size() - 1]);
}

} // namespace

ExperimentConfig example_config(const std::string& name) {
    ExperimentConfig c;
    c.example = name;
    if (name == "custom") return c;

    if (name == "ac2d") {
        c.scheme = "pcc";
        c.tableau = "u-etdrk3";
        c.tau = 0.01;
        c.t_max = 0.5;
        c.dim = 2;
        c.modes = {128, 128, 1};
        c.lo = {0.0, 0.0, 0.0};
        c.hi = {kTwoPi, kTwoPi, 1.0};
        c.potential = "double-well";
        c.mobility = "allen-cahn";
        c.eps2 = 0.01;
        c.initial = "tanh-circle";
    } else if (name == "ac3d") {
        c.scheme = "pcc";
        c.tableau = "u-etdrk3";
        c.tau = 0.01;
        c.t_max = 0.5;
        c.dim = 3;
        c.modes = {64, 64, 64};
        c.lo = {-kPi, -kPi, -kPi};
        c.hi = {kPi, kPi, kPi};
        c.potential = "double-well";
        c.mobility = "allen-cahn";
        c.eps2 = 0.01;
        c.initial = "spheres";
        c.initial_amp = 1.0;
    } else if (name == "ch2d") {
        c.scheme = "pcc";
        c.tableau = "etdrk2";
        c.tau = 1e-4;
        c.t_max = 0.05;
        c.dim = 2;
        c.modes = {128, 128, 1};
        c.lo = {0.0, 0.0, 0.0};
        c.hi = {kTwoPi, kTwoPi, 1.0};
        c.potential = "flory-huggins";
        c.mobility = "cahn-hilliard";
        c.eps2 = 0.01;
        c.theta0 = 3.0;
        c.delta = 0.01;
        c.initial = "random-uniform";
        c.initial_mean = 0.2;
        c.initial_amp = 0.05;
        c.seed = 2024;
    } else if (name == "ch3d") {
        c.scheme = "pcc";
        c.tableau = "u-etdrk3";
        c.tau = 0.01;
        c.t_max = 0.5;
        c.dim = 3;
        c.modes = {64, 64, 64};
        c.lo = {-kPi, -kPi, -kPi};
        c.hi = {kPi, kPi, kPi};
        c.potential = "flory-huggins";
        c.mobility = "cahn-hilliard";
        c.eps2 = 0.01;
        c.stabilizer = 5.0 / 0.01;
        c.theta0 = 3.0;
        c.delta = 0.01;
        c.initial = "spheres";
        c.initial_amp = 0.5;
    } else {
        throw std::invalid_argument("unknown example: " + name);
    }
    return c;
}

std::map<std::string, std::string> read_key_value_file(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw std::runtime_error("config: cannot open " + p.string());
    std::map<std::string, std::string> out;
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config: bad section header at line " +
                                         std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: expected key=value at line " +
                                     std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw std::runtime_error("config: empty key at line " + std::to_string(lineno));
        if (!section.empty()) key = section + "." + key;
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

void apply_config_entries(ExperimentConfig& cfg,
                          const std::map<std::string, std::string>& entries) {
    for (const auto& [key, v] : entries) {
        if (key == "experiment.example") continue; // handled by the caller
        if (key == "experiment.scheme") cfg.scheme = v;
        else if (key == "experiment.tableau") cfg.tableau = v;
        else if (key == "experiment.tau") cfg.tau = to_double(key, v);
        else if (key == "experiment.t_max") cfg.t_max = to_double(key, v);
        else if (key == "experiment.seed") cfg.seed = static_cast<std::uint64_t>(to_double(key, v));
        else if (key == "experiment.stop_at_steady_state") cfg.stop_at_steady_state = to_bool(key, v);
        else if (key == "grid.dim") cfg.dim = to_int(key, v);
        else if (key == "grid.modes") fill_axes(key, v, cfg.modes, to_int);
        else if (key == "grid.lo") fill_axes(key, v, cfg.lo, to_double);
        else if (key == "grid.hi") fill_axes(key, v, cfg.hi, to_double);
        else if (key == "model.potential") cfg.potential = v;
        else if (key == "model.mobility") cfg.mobility = v;
        else if (key == "model.beta") cfg.beta = to_double(key, v);
        else if (key == "model.eps2") cfg.eps2 = to_double(key, v);
        else if (key == "model.stabilizer") cfg.stabilizer = to_double(key, v);
        else if (key == "model.theta0") cfg.theta0 = to_double(key, v);
        else if (key == "model.delta") cfg.delta = to_double(key, v);
        else if (key == "model.delta_prime") cfg.delta_prime = to_double(key, v);
        else if (key == "initial.kind") cfg.initial = v;
        else if (key == "initial.mean") cfg.initial_mean = to_double(key, v);
        else if (key == "initial.amp") cfg.initial_amp = to_double(key, v);
        else if (key == "output.energy_form") cfg.energy_form = v;
        else if (key == "output.out_dir") cfg.out_dir = v;
        else if (key == "output.snapshot_times") {
            cfg.snapshot_times.clear();
            for (const auto& item : split_list(v))
                cfg.snapshot_times.push_back(to_double(key, item));
        } else {
            throw std::invalid_argument("config: unknown key " + key);
        }
    }
    if (cfg.tau <= 0) throw std::invalid_argument("config: tau must be positive");
    if (cfg.t_max < cfg.tau) throw std::invalid_argument("config: t_max must be >= tau");
    if (cfg.dim < 1 || cfg.dim > 3) throw std::invalid_argument("config: dim must be 1-3");
    for (int a = 0; a < cfg.dim; ++a)
        if (cfg.modes[a] % 2 != 0 || cfg.modes[a] < 4)
            throw std::invalid_argument("config: modes must be even and >= 4");
}

ExperimentConfig load_config(const std::filesystem::path& p) {
    auto entries = read_key_value_file(p);
    std::string example = "custom";
    if (auto it = entries.find("experiment.example"); it != entries.end())
        example = it->second;
    ExperimentConfig cfg = example_config(example);
    apply_config_entries(cfg, entries);
    return cfg;
}

} // namespace gfpc

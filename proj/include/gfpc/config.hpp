#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace gfpc {

/// One experiment: model, grid, scheme, time stepping, outputs.
/// Built from a preset name, a key=value config file, CLI overrides, or all
/// three (later sources win).
struct ExperimentConfig {
    // [experiment]
    std::string example = "custom"; // ac2d | ac3d | ch2d | ch3d | custom
    std::string scheme = "pcc";     // plain | pc | pcc | pcc-prime
    std::string tableau = "u-etdrk3";
    double tau = 1e-2;
    double t_max = 0.1;
    std::uint64_t seed = 0;
    bool stop_at_steady_state = false;

    // [grid]
    int dim = 2;
    std::array<int, 3> modes = {128, 128, 1};
    std::array<double, 3> lo = {0.0, 0.0, 0.0};
    std::array<double, 3> hi = {6.283185307179586, 6.283185307179586, 1.0};

    // [model]
    std::string potential = "double-well"; // double-well | flory-huggins | zero
    std::string mobility = "allen-cahn";   // allen-cahn | cahn-hilliard
    double beta = 1.0;
    double eps2 = 0.01;
    double stabilizer = -1.0; // < 0 means "use 1/eps2"
    double theta0 = 3.0;
    double delta = 0.01;
    double delta_prime = -1.0; // < 0 means delta/2

    // [initial]
    std::string initial = "tanh-circle"; // tanh-circle | spheres | random-uniform | cosine | constant
    double initial_mean = 0.2;
    double initial_amp = 0.05;

    // [output]
    std::string energy_form = "interpolation"; // interpolation | projection | fd
    std::string out_dir = ".";
    std::vector<double> snapshot_times;

    double effective_stabilizer() const { return stabilizer < 0 ? 1.0 / eps2 : stabilizer; }
};

/// Grid/model/initial defaults for the four named experiments
/// (desk-scale grids: 128^2 in 2-D, 64^3 in 3-D).
ExperimentConfig example_config(const std::string& name);

/// Flat key=value text with optional [section] headers; keys are stored
/// section-qualified ("experiment.tau"). '#' starts a comment.
std::map<std::string, std::string> read_key_value_file(const std::filesystem::path& p);

/// Apply a parsed key/value map over a config. Unknown keys are an error.
void apply_config_entries(ExperimentConfig& cfg,
                          const std::map<std::string, std::string>& entries);

ExperimentConfig load_config(const std::filesystem::path& p);

} // namespace gfpc

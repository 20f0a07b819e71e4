#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfpc/config.hpp"
#include "gfpc/field.hpp"
#include "gfpc/schemes.hpp"

namespace gfpc {

enum class RunStatus { Completed, SteadyStateEarlyExit, BlowUpDetected };
const char* run_status_name(RunStatus s);

struct RunResult {
    RunStatus status = RunStatus::Completed;
    int steps_taken = 0;
    std::optional<Field> final_field; // empty only if step 1 already blew up
    std::vector<StepReport> reports;
};

/// Time-steps the configured experiment, writing energy.csv (columns
/// n,t,eta,newton_iters,lambda_max,energy,phi_min,phi_max,mean) and any
/// requested phi_t<time>.gfpc snapshots into out_dir. Blow-up terminates the
/// run gracefully with partial outputs.
RunResult run_simulation(const ExperimentConfig& cfg);

/// Same, without touching the filesystem (out_dir ignored).
RunResult run_simulation_in_memory(const ExperimentConfig& cfg);

struct ConvergenceStudy {
    std::vector<int> ladder = {50, 100, 200, 400, 800}; // step counts for tau = t_max/N
    std::string ref_tableau = "u-etdrk4";
    std::string ref_scheme = "pcc";
    double ref_tau = 1e-4;
    /// (tableau, scheme) pairs to measure; all share one reference run.
    std::vector<std::pair<std::string, std::string>> runs;
};

struct ConvergenceEntry {
    std::string tableau;
    std::string scheme;
    int n_steps = 0;
    double tau = 0.0;
    double error = 0.0; // L2 against the reference at t_max
    double rate = 0.0;  // log2 ratio vs previous ladder entry; 0 for the first
};

struct ConvergenceResult {
    std::vector<ConvergenceEntry> entries;
};

/// Rates for a dyadic ladder: rate_k = log(e_{k-1}/e_k) / log(N_k/N_{k-1}).
std::vector<double> ladder_rates(const std::vector<double>& errors,
                                 const std::vector<int>& ladder);

/// Runs the reference once, then every (tableau, scheme) over the ladder and
/// writes convergence.csv into out_dir (plus a text table to the stream if
/// given). Warns to stderr when ref_tau > smallest tau / 10.
ConvergenceResult run_convergence(const ExperimentConfig& base,
                                  const ConvergenceStudy& study,
                                  std::ostream* table_out = nullptr);

} // namespace gfpc

#include "gfpc/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gfpc/energy.hpp"
#include "gfpc/errors.hpp"
#include "gfpc/initial_data.hpp"
#include "gfpc/snapshot.hpp"

namespace gfpc {
namespace {

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string snapshot_name(double t) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "phi_t%.6f.gfpc", t);
    return buf;
}

RunResult run_impl(const ExperimentConfig& cfg, bool write_files) {
    auto grid = grid_from_config(cfg);
    FlowSpec flow = flow_from_config(cfg);
    const auto& tableau = tableau_catalog(cfg.tableau);
    const SchemeKind kind = scheme_from_name(cfg.scheme);

    EnergyCorrectorConfig energy_cfg;
    energy_cfg.form = energy_form_from_name(cfg.energy_form);
    SchemeStepper stepper(grid, tableau, flow, cfg.tau, kind, energy_cfg);
    if (stepper.uncertified_pc_warning())
        std::cerr << "warning: tableau " << tableau.name
                  << " has no energy certificate; pc relies on the cutoff only\n";

    const int n_steps = static_cast<int>(std::llround(cfg.t_max / cfg.tau));
    Field phi = initial_data(cfg, grid);

    std::filesystem::path out_dir = cfg.out_dir;
    std::ofstream csv;
    if (write_files) {
        std::filesystem::create_directories(out_dir);
        csv.open(out_dir / "energy.csv", std::ios::trunc);
        if (!csv) throw std::runtime_error("cannot write energy.csv in " + out_dir.string());
        csv << "n,t,eta,newton_iters,lambda_max,energy,phi_min,phi_max,mean\n";
    }
    auto log_row = [&](int n, double t, const StepReport* rep, const Field& f) {
        if (!write_files) return;
        const double e = rep ? rep->energy_post_corrector2
                             : energy(flow, energy_cfg.form, f);
        csv << n << ',' << fmt_g17(t) << ',' << fmt_g17(rep ? rep->eta : 0.0) << ','
            << (rep ? rep->newton_iters : 0) << ',' << fmt_g17(rep ? rep->lambda_max : 0.0)
            << ',' << fmt_g17(e) << ',' << fmt_g17(f.min()) << ',' << fmt_g17(f.max())
            << ',' << fmt_g17(f.mean()) << '\n';
    };

    // snapshot schedule: each requested time fires at the first step reaching it
    std::vector<double> snap_times = cfg.snapshot_times;
    std::sort(snap_times.begin(), snap_times.end());
    std::size_t next_snap = 0;
    auto take_snapshots = [&](double t, const Field& f) {
        if (!write_files) return;
        while (next_snap < snap_times.size() && t >= snap_times[next_snap] - 1e-12) {
            write_snapshot(out_dir / snapshot_name(snap_times[next_snap]), f);
            ++next_snap;
        }
    };

    RunResult result;
    log_row(0, 0.0, nullptr, phi);
    take_snapshots(0.0, phi);

    for (int n = 0; n < n_steps; ++n) {
        std::optional<SchemeStepResult> sr;
        try {
            sr.emplace(stepper.step(phi, n));
        } catch (const BlowUpError& e) {
            std::cerr << "blow-up at step " << n + 1 << ": " << e.what() << "\n";
            result.status = RunStatus::BlowUpDetected;
            break; // keep the last finite field and the partial log
        }
        phi = std::move(sr->phi);
        result.reports.push_back(sr->report);
        result.steps_taken = n + 1;
        const double t = (n + 1) * cfg.tau;
        log_row(n + 1, t, &sr->report, phi);
        take_snapshots(t, phi);
        if (cfg.stop_at_steady_state && sr->report.steady_state) {
            result.status = RunStatus::SteadyStateEarlyExit;
            break;
        }
    }
    result.final_field = std::move(phi);
    return result;
}

} // namespace

const char* run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Completed: return "completed";
        case RunStatus::SteadyStateEarlyExit: return "steady-state-early-exit";
        case RunStatus::BlowUpDetected: return "blow-up-detected";
    }
    return "?";
}

RunResult run_simulation(const ExperimentConfig& cfg) { return run_impl(cfg, true); }

RunResult run_simulation_in_memory(const ExperimentConfig& cfg) {
    return run_impl(cfg, false);
}

std::vector<double> ladder_rates(const std::vector<double>& errors,
                                 const std::vector<int>& ladder) {
    if (errors.size() != ladder.size())
        throw std::invalid_argument("ladder_rates: size mismatch");
    std::vector<double> rates(errors.size(), 0.0);
    for (std::size_t k = 1; k < errors.size(); ++k)
        rates[k] = std::log(errors[k - 1] / errors[k]) /
                   std::log(static_cast<double>(ladder[k]) / ladder[k - 1]);
    return rates;
}

ConvergenceResult run_convergence(const ExperimentConfig& base,
                                  const ConvergenceStudy& study,
                                  std::ostream* table_out) {
    if (study.ladder.empty() || study.runs.empty())
        throw std::invalid_argument("run_convergence: empty ladder or run list");

    const double tau_min = base.t_max / *std::max_element(study.ladder.begin(), study.ladder.end());
    if (study.ref_tau > tau_min / 10.0)
        std::cerr << "warning: reference tau " << study.ref_tau
                  << " is coarser than smallest ladder tau / 10 (" << tau_min / 10.0
                  << "); reference error may not be negligible\n";

    ExperimentConfig ref_cfg = base;
    ref_cfg.tableau = study.ref_tableau;
    ref_cfg.scheme = study.ref_scheme;
    ref_cfg.tau = study.ref_tau;
    RunResult ref = run_simulation_in_memory(ref_cfg);
    if (ref.status == RunStatus::BlowUpDetected || !ref.final_field)
        throw std::runtime_error("run_convergence: reference run failed");
    const Field& ref_phi = *ref.final_field;

    ConvergenceResult out;
    for (const auto& [tableau, scheme] : study.runs) {
        std::vector<double> errors;
        for (std::size_t k = 0; k < study.ladder.size(); ++k) {
            ExperimentConfig cfg = base;
            cfg.tableau = tableau;
            cfg.scheme = scheme;
            cfg.tau = base.t_max / study.ladder[k];
            RunResult r = run_simulation_in_memory(cfg);
            if (r.status == RunStatus::BlowUpDetected || !r.final_field)
                throw std::runtime_error("run_convergence: ladder run failed for " +
                                         tableau + "-" + scheme);
            errors.push_back(l2_error(*r.final_field, ref_phi));
        }
        const auto rates = ladder_rates(errors, study.ladder);
        for (std::size_t k = 0; k < study.ladder.size(); ++k) {
            ConvergenceEntry e;
            e.tableau = tableau;
            e.scheme = scheme;
            e.n_steps = study.ladder[k];
            e.tau = base.t_max / study.ladder[k];
            e.error = errors[k];
            e.rate = rates[k];
            out.entries.push_back(std::move(e));
        }
    }

    std::filesystem::path out_dir = base.out_dir;
    std::filesystem::create_directories(out_dir);
    std::ofstream csv(out_dir / "convergence.csv", std::ios::trunc);
    csv << "tableau,scheme,n_steps,tau,l2_error,rate\n";
    for (const auto& e : out.entries)
        csv << e.tableau << ',' << e.scheme << ',' << e.n_steps << ',' << fmt_g17(e.tau)
            << ',' << fmt_g17(e.error) << ',' << fmt_g17(e.rate) << '\n';

    if (table_out) {
        char buf[160];
        for (const auto& [tableau, scheme] : study.runs) {
            *table_out << tableau << "-" << scheme << "\n";
            std::snprintf(buf, sizeof buf, "  %6s  %12s  %12s  %6s\n", "N", "tau", "L2 error",
                          "rate");
            *table_out << buf;
            for (const auto& e : out.entries) {
                if (e.tableau != tableau || e.scheme != scheme) continue;
                std::snprintf(buf, sizeof buf, "  %6d  %12.4e  %12.4e  %6.2f\n", e.n_steps,
                              e.tau, e.error, e.rate);
                *table_out << buf;
            }
        }
    }
    return out;
}

} // namespace gfpc

// Command-line front end: run experiments, convergence studies, and tableau
// certification reports. Every flag mirrors a config-file key; flags win.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfpc/certify.hpp"
#include "gfpc/config.hpp"
#include "gfpc/simulation.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string example;
    std::string scheme;
    std::string tableau;
    int grid = 0;
    double tau = -1.0;
    double tmax = -1.0;
    std::int64_t seed = -1;
    std::string energy_form;
    std::string out_dir;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "config file (key=value with [sections])");
    cmd->add_option("--example", f.example, "preset: ac2d | ac3d | ch2d | ch3d | custom");
    cmd->add_option("--scheme", f.scheme, "plain | pc | pcc | pccp");
    cmd->add_option("--tableau", f.tableau,
                    "etdrk1 | etdrk2 | etdrk3 | u-etdrk3 | u-etdrk4");
    cmd->add_option("--grid", f.grid, "modes per axis (even)");
    cmd->add_option("--tau", f.tau, "time step");
    cmd->add_option("--tmax", f.tmax, "final time");
    cmd->add_option("--seed", f.seed, "rng seed for random initial data");
    cmd->add_option("--energy-form", f.energy_form, "interpolation | projection | fd");
    cmd->add_option("--out", f.out_dir, "output directory");
}

gfpc::ExperimentConfig build_config(const CommonFlags& f) {
    gfpc::ExperimentConfig cfg;
    if (!f.config_path.empty()) cfg = gfpc::load_config(f.config_path);
    if (!f.example.empty()) {
        gfpc::ExperimentConfig preset = gfpc::example_config(f.example);
        if (!f.config_path.empty()) {
            // preset base, then re-apply the file on top
            auto entries = gfpc::read_key_value_file(f.config_path);
            gfpc::apply_config_entries(preset, entries);
        }
        cfg = preset;
    }
    if (!f.scheme.empty()) cfg.scheme = f.scheme;
    if (!f.tableau.empty()) cfg.tableau = f.tableau;
    if (f.grid > 0) cfg.modes = {f.grid, f.grid, f.grid};
    if (f.tau > 0) cfg.tau = f.tau;
    if (f.tmax > 0) cfg.t_max = f.tmax;
    if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
    if (!f.energy_form.empty()) cfg.energy_form = f.energy_form;
    if (!f.out_dir.empty()) cfg.out_dir = f.out_dir;
    return cfg;
}

std::vector<double> parse_times(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

int cmd_run(const CommonFlags& f, const std::string& snapshots, bool stop_steady) {
    gfpc::ExperimentConfig cfg = build_config(f);
    if (!snapshots.empty()) cfg.snapshot_times = parse_times(snapshots);
    if (stop_steady) cfg.stop_at_steady_state = true;

    gfpc::RunResult r = gfpc::run_simulation(cfg);
    double last_energy = 0.0, max_abs = 0.0;
    for (const auto& rep : r.reports) {
        last_energy = rep.energy_post_corrector2;
        max_abs = std::max({max_abs, std::abs(rep.phi_min), std::abs(rep.phi_max)});
    }
    std::printf("status: %s after %d steps\n", gfpc::run_status_name(r.status),
                r.steps_taken);
    if (!r.reports.empty())
        std::printf("final energy %.10e, max |phi| over run %.15f\n", last_energy, max_abs);
    switch (r.status) {
        case gfpc::RunStatus::Completed: return 0;
        case gfpc::RunStatus::SteadyStateEarlyExit: return 2;
        case gfpc::RunStatus::BlowUpDetected: return 3;
    }
    return 1;
}

int cmd_converge(const CommonFlags& f, const std::string& runs_spec,
                 const std::string& ladder_spec, const std::string& ref_tableau,
                 const std::string& ref_scheme, double ref_tau) {
    gfpc::ExperimentConfig base = build_config(f);
    gfpc::ConvergenceStudy study;
    if (!ref_tableau.empty()) study.ref_tableau = ref_tableau;
    if (!ref_scheme.empty()) study.ref_scheme = ref_scheme;
    if (ref_tau > 0) study.ref_tau = ref_tau;
    if (!ladder_spec.empty()) {
        study.ladder.clear();
        for (double v : parse_times(ladder_spec)) study.ladder.push_back(static_cast<int>(v));
    }
    if (runs_spec.empty()) {
        study.runs = {{base.tableau, base.scheme}};
    } else {
        std::stringstream ss(runs_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--runs", "expected tableau:scheme pairs");
            study.runs.emplace_back(item.substr(0, colon), item.substr(colon + 1));
        }
    }
    gfpc::run_convergence(base, study, &std::cout);
    return 0;
}

int cmd_certify(const std::string& tableau, const std::string& out_dir) {
    std::vector<std::string> names =
        tableau.empty() ? gfpc::tableau_names() : std::vector<std::string>{tableau};
    std::vector<gfpc::CertificationReport> reports;
    for (const auto& name : names)
        reports.push_back(gfpc::certify_assumption_A(gfpc::tableau_catalog(name)));
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream txt(std::filesystem::path(out_dir) / "certification.txt");
        gfpc::write_certification_text(txt, reports);
        std::ofstream csv(std::filesystem::path(out_dir) / "certification.csv");
        gfpc::write_certification_csv(csv, reports);
    }
    bool all_listed_ok = true;
    for (const auto& r : reports) {
        std::printf("%-10s %-13s min_eig %.6e", r.tableau.c_str(),
                    r.certified ? "certified" : "not-certified", r.min_eig);
        if (!r.certified) std::printf("  first failure at z=%.6e", r.first_failure_z);
        std::printf("\n");
        if (!r.certified) all_listed_ok = false;
    }
    return all_listed_ok ? 0 : 1;
}

int cmd_order_check(const std::string& tableau, int order, const std::string& out_dir) {
    const auto& t = gfpc::tableau_catalog(tableau);
    const int p = order > 0 ? order : std::min(t.claimed_order, 3);
    gfpc::OrderConditionReport rep = gfpc::check_order_conditions(t, p);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream txt(std::filesystem::path(out_dir) / "order_conditions.txt");
        gfpc::write_order_text(txt, rep);
        std::ofstream csv(std::filesystem::path(out_dir) / "order_conditions.csv");
        gfpc::write_order_csv(csv, rep);
    }
    double worst = 0.0;
    for (const auto& e : rep.entries) {
        std::printf("%-28s max residual %.6e\n", e.condition.c_str(), e.max_residual);
        worst = std::max(worst, e.max_residual);
    }
    std::printf("%s claimed order %d: checked through order %d, worst residual %.6e\n",
                rep.tableau.c_str(), t.claimed_order, p, worst);
    return worst < 1e-9 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral gradient-flow solver with corrected exponential integrators"};
    app.require_subcommand(1);

    CommonFlags run_flags, conv_flags;
    std::string snapshots;
    bool stop_steady = false;
    CLI::App* run = app.add_subcommand("run", "time-step one configured experiment");
    add_common(run, run_flags);
    run->add_option("--snapshots", snapshots, "comma-separated snapshot times");
    run->add_flag("--stop-at-steady", stop_steady, "exit early once the flow stalls");

    std::string runs_spec, ladder_spec, ref_tableau, ref_scheme;
    double ref_tau = -1.0;
    CLI::App* conv = app.add_subcommand("converge", "temporal convergence study");
    add_common(conv, conv_flags);
    conv->add_option("--runs", runs_spec, "tableau:scheme pairs, comma separated");
    conv->add_option("--ladder", ladder_spec, "step counts, e.g. 50,100,200,400,800");
    conv->add_option("--ref-tableau", ref_tableau, "reference tableau");
    conv->add_option("--ref-scheme", ref_scheme, "reference scheme");
    conv->add_option("--ref-tau", ref_tau, "reference time step");

    std::string cert_tableau, cert_out;
    CLI::App* cert = app.add_subcommand("certify", "energy-dissipation certificate sweep");
    cert->add_option("--tableau", cert_tableau, "one tableau (default: all)");
    cert->add_option("--out", cert_out, "directory for certification.txt/.csv");

    std::string oc_tableau = "etdrk2", oc_out;
    int oc_order = 0;
    CLI::App* oc = app.add_subcommand("order-check", "stiff order-condition residuals");
    oc->add_option("--tableau", oc_tableau, "tableau name");
    oc->add_option("--order", oc_order, "check through this order (default: claimed, <=3)");
    oc->add_option("--out", oc_out, "directory for order_conditions.txt/.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_flags, snapshots, stop_steady);
        if (conv->parsed())
            return cmd_converge(conv_flags, runs_spec, ladder_spec, ref_tableau, ref_scheme,
                                ref_tau);
        if (cert->parsed()) return cmd_certify(cert_tableau, cert_out);
        if (oc->parsed()) return cmd_order_check(oc_tableau, oc_order, oc_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

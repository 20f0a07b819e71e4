#pragma once

#include <memory>
#include <string>

#include "gfpc/correctors.hpp"
#include "gfpc/etdrk.hpp"

namespace gfpc {

enum class SchemeKind {
    Plain,   ///< predictor only
    PC,      ///< predictor + cutoff (stabilized predictor form)
    PCC,     ///< predictor + energy projection + cutoff
    PCCPrime ///< predictor + cutoff + energy projection
};

SchemeKind scheme_from_name(const std::string& name);
const char* scheme_name(SchemeKind s);

/// Per-step record; mirrors the energy.csv columns plus the complementarity
/// residuals the CSV does not carry.
struct StepReport {
    int step_index = 0;
    double t = 0.0;
    double eta = 0.0;
    int newton_iters = 0;
    double lambda_max = 0.0;
    double energy_pre = 0.0;             // E[phi_n]
    double energy_post_corrector1 = 0.0; // after the first applied stage (predictor for Plain/PC)
    double energy_post_corrector2 = 0.0; // final
    double phi_min = 0.0, phi_max = 0.0;
    double mass_mean = 0.0;
    bool steady_state = false;
    double kkt_eta_d = 0.0;    // |eta * D(eta)|
    double kkt_lambda_p = 0.0; // max_j |lambda_j p(phi_j)|
    double d_value = 0.0;      // D(eta) at acceptance
    double mbp_overshoot = 0.0; // max(0, ||phi||_inf - bound)
    double eta_smallness = 0.0; // eta * max|f'| on the admissible range (PCC' regime check)
};

struct SchemeStepResult {
    Field phi;
    StepReport report;
};

/// Drives one full corrected step of the chosen scheme.
class SchemeStepper {
public:
    SchemeStepper(GridPtr grid, const ExponentialTableau& tableau, const FlowSpec& flow,
                  double tau, SchemeKind kind, EnergyCorrectorConfig energy_cfg = {},
                  BoundCorrectorConfig bound_cfg = {});

    SchemeStepResult step(const Field& phi, int step_index) const;

    const EtdrkStepper& predictor() const { return predictor_; }
    SchemeKind kind() const { return kind_; }
    /// Set when kind == PC but the tableau is not energy-stable; stepping
    /// proceeds, callers may surface the warning.
    bool uncertified_pc_warning() const { return uncertified_pc_; }

private:
    EtdrkStepper predictor_;
    SchemeKind kind_;
    EnergyCorrectorConfig energy_cfg_;
    BoundCorrectorConfig bound_cfg_;
    bool uncertified_pc_ = false;
};

} // namespace gfpc

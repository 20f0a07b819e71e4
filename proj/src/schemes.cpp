#include "gfpc/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace gfpc {

SchemeKind scheme_from_name(const std::string& name) {
    if (name == "plain") return SchemeKind::Plain;
    if (name == "pc") return SchemeKind::PC;
    if (name == "pcc") return SchemeKind::PCC;
    if (name == "pccp" || name == "pcc'" || name == "pcc-prime") return SchemeKind::PCCPrime;
    throw std::invalid_argument("unknown scheme: " + name);
}

const char* scheme_name(SchemeKind s) {
    switch (s) {
        case SchemeKind::Plain: return "plain";
        case SchemeKind::PC: return "pc";
        case SchemeKind::PCC: return "pcc";
        case SchemeKind::PCCPrime: return "pccp";
    }
    return "?";
}

SchemeStepper::SchemeStepper(GridPtr grid, const ExponentialTableau& tableau,
                             const FlowSpec& flow, double tau, SchemeKind kind,
                             EnergyCorrectorConfig energy_cfg, BoundCorrectorConfig bound_cfg)
    : predictor_(std::move(grid), tableau, flow, tau,
                 kind == SchemeKind::PC ? PredictorForm::Stabilized
                                        : PredictorForm::Exponential),
      kind_(kind),
      energy_cfg_(energy_cfg),
      bound_cfg_(bound_cfg),
      uncertified_pc_(kind == SchemeKind::PC && !tableau.energy_stable) {}

SchemeStepResult SchemeStepper::step(const Field& phi, int step_index) const {
    const FlowSpec& flow = predictor_.flow();
    const double tau = predictor_.tau();
    const EnergyForm form = energy_cfg_.form;

    StepReport rep;
    rep.step_index = step_index;
    rep.t = (step_index + 1) * tau;
    rep.energy_pre = energy(flow, form, phi);

    Field pred = predictor_.step(phi, step_index);
    Field out = pred;

    switch (kind_) {
        case SchemeKind::Plain: {
            rep.energy_post_corrector1 = energy(flow, form, pred);
            rep.energy_post_corrector2 = rep.energy_post_corrector1;
            break;
        }
        case SchemeKind::PC: {
            rep.energy_post_corrector1 = energy(flow, form, pred);
            auto cut = bound_project(flow.potential, pred, bound_cfg_);
            rep.lambda_max = cut.lambda_max;
            rep.kkt_lambda_p = cut.max_lambda_p;
            out = std::move(cut.phi);
            rep.energy_post_corrector2 = energy(flow, form, out);
            break;
        }
        case SchemeKind::PCC: {
            auto proj = energy_project(flow, phi, pred, tau, energy_cfg_);
            rep.eta = proj.eta;
            rep.newton_iters = proj.newton_iters;
            rep.steady_state = proj.steady_state;
            rep.d_value = proj.d_value;
            rep.kkt_eta_d = std::abs(proj.eta * proj.d_value);
            rep.energy_post_corrector1 = energy(flow, form, proj.phi);
            auto cut = bound_project(flow.potential, proj.phi, bound_cfg_);
            rep.lambda_max = cut.lambda_max;
            rep.kkt_lambda_p = cut.max_lambda_p;
            out = std::move(cut.phi);
            rep.energy_post_corrector2 = energy(flow, form, out);
            break;
        }
        case SchemeKind::PCCPrime: {
            auto cut = bound_project(flow.potential, pred, bound_cfg_);
            rep.lambda_max = cut.lambda_max;
            rep.kkt_lambda_p = cut.max_lambda_p;
            rep.energy_post_corrector1 = energy(flow, form, cut.phi);
            auto proj = energy_project(flow, phi, cut.phi, tau, energy_cfg_);
            rep.eta = proj.eta;
            rep.newton_iters = proj.newton_iters;
            rep.steady_state = proj.steady_state;
            rep.d_value = proj.d_value;
            rep.kkt_eta_d = std::abs(proj.eta * proj.d_value);
            out = std::move(proj.phi);
            rep.energy_post_corrector2 = energy(flow, form, out);
            break;
        }
    }

    rep.phi_min = out.min();
    rep.phi_max = out.max();
    rep.mass_mean = out.mean();
    rep.mbp_overshoot = std::max(0.0, out.max_abs() - flow.potential.bound());
    rep.eta_smallness = rep.eta * flow.potential.lipschitz_f();
    return {std::move(out), std::move(rep)};
}

} // namespace gfpc

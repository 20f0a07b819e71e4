#pragma once

#include "gfpc/energy.hpp"
#include "gfpc/field.hpp"
#include "gfpc/potential.hpp"

namespace gfpc {

struct EnergyCorrectorConfig {
    /// |D| acceptance tolerance is newton_tol_scale * max(1, |E[phi_n]|).
    double newton_tol_scale = 1e-10;
    int max_newton = 50;
    /// Steady-state skip when ||mu(phi_n)||^2 < steady_tol (discrete L2).
    double steady_tol = 1e-12;
    /// Bracket doubling for the bisection fallback stops at cap_factor * tau.
    double bracket_cap_factor = 1e12;
    EnergyForm form = EnergyForm::InterpolationSpectral;
};

struct BoundCorrectorConfig {
    /// Apply the spectral truncation P_h after the cutoff (trades exact nodal
    /// bounds for the projected-energy monotonicity path).
    bool enforce_projection_energy = false;
    double mbp_tol = 1e-10;
};

struct EnergyProjectResult {
    Field phi;        ///< corrected field phi*(eta)
    double eta = 0.0; ///< KKT multiplier, >= 0
    int newton_iters = 0;
    double d_value = 0.0; ///< D(eta) at acceptance (E[phi*] - E[phi_n])
    bool steady_state = false;
    bool used_bisection = false;
};

/// Corrector enforcing E[phi*] <= E[phi_n]: solves
///   phi* = (I - eta Lap)^{-1} (input - eta f(input)),  eta >= 0,
/// with eta = 0 when the input already dissipates, else Newton on
/// D(eta) = E[phi*(eta)] - E[phi_n] with the analytic derivative and a
/// bracketed bisection safeguard. Throws CorrectorFailure when no sign change
/// appears below the bracket cap.
EnergyProjectResult energy_project(const FlowSpec& flow, const Field& phi_n,
                                   const Field& input, double tau,
                                   const EnergyCorrectorConfig& cfg = {});

/// Root of D by pure bisection (no Newton). Test oracle for the agreement
/// check; shares only the definition of D with energy_project.
double energy_project_bisection_eta(const FlowSpec& flow, const Field& phi_n,
                                    const Field& input, double tau,
                                    const EnergyCorrectorConfig& cfg = {});

struct BoundProjectResult {
    Field phi;    ///< cutoff (and optionally P_h-projected) field
    Field lambda; ///< pointwise multiplier of the bound constraint, >= 0
    double lambda_max = 0.0;
    double max_lambda_p = 0.0; ///< max_j |lambda_j * p(phi_j)|, exact 0 for pure cutoff
};

/// Pointwise cutoff onto [-b, b] with b = potential bound:
///   phi_j = clamp(input_j), lambda_j = distance past the bound / (2b).
BoundProjectResult bound_project(const PotentialModel& model, const Field& input,
                                 const BoundCorrectorConfig& cfg = {});

/// Scalar cutoff used by bound_project; exposed for property tests.
double cutoff_scalar(double v, double b);

} // namespace gfpc

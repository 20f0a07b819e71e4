#include "gfpc/correctors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gfpc/errors.hpp"
#include "gfpc/spectral.hpp"

namespace gfpc {
namespace {

/// Shared state of one energy-projection solve. The input's transform and
/// f(input)'s transform are fixed, so phi*(eta) is a pure per-mode expression
///   phi*_hat = (input_hat - eta f_hat) / (1 + eta |k|^2)
/// and every D or D' evaluation costs one or two inverse transforms.
struct ProjectionSolve {
    const FlowSpec& flow;
    EnergyForm form;
    GridPtr grid;
    double e_ref; // E[phi_n]
    Coefficients input_hat;
    Coefficients f_hat;
    std::vector<double> f_nodal;

    ProjectionSolve(const FlowSpec& fl, EnergyForm fo, const Field& phi_n,
                    const Field& input)
        : flow(fl), form(fo), grid(input.grid_ptr()) {
        e_ref = energy(flow, form, phi_n);
        input_hat = transform_forward(input);
        f_nodal.resize(input.size());
        for (std::size_t i = 0; i < input.size(); ++i)
            f_nodal[i] = flow.potential.f(input[i]);
        f_hat = transform_forward(Field(grid, f_nodal));
    }

    Field phi_star(double eta) const {
        Coefficients c(input_hat.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = (input_hat[i] - eta * f_hat[i]) / (1.0 + eta * grid->k_squared(i));
        return transform_inverse(grid, c);
    }

    double D(double eta) const { return energy(flow, form, phi_star(eta)) - e_ref; }

    /// d/d eta of D: <mu(phi*), dphi*/deta> with
    /// dphi*/deta = (I - eta Lap)^{-2} Lap (input - eta f) - (I - eta Lap)^{-1} f.
    double D_prime(double eta) const {
        Field star = phi_star(eta);
        Field mu = variational_derivative(flow, form, star);
        Coefficients c(input_hat.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            const double k2 = grid->k_squared(i);
            const double r = 1.0 / (1.0 + eta * k2);
            c[i] = -k2 * r * r * (input_hat[i] - eta * f_hat[i]) - r * f_hat[i];
        }
        Field w = transform_inverse(grid, c);
        double s = 0.0;
        for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * w[i];
        return grid->cell_volume() * s;
    }
};

} // namespace

EnergyProjectResult energy_project(const FlowSpec& flow, const Field& phi_n,
                                   const Field& input, double tau,
                                   const EnergyCorrectorConfig& cfg) {
    if (phi_n.grid() != input.grid())
        throw std::invalid_argument("energy_project: grid mismatch");

    // steady state: the flow has stalled, skip the projection entirely
    {
        Field mu_n = variational_derivative(flow, cfg.form, phi_n);
        const double mu2 = l2_norm(mu_n);
        if (mu2 * mu2 < cfg.steady_tol)
            return {input, 0.0, 0, 0.0, true, false};
    }

    ProjectionSolve solve(flow, cfg.form, phi_n, input);
    const double tol = cfg.newton_tol_scale * std::max(1.0, std::abs(solve.e_ref));

    // within the acceptance tolerance the identity already dissipates; return
    // the input itself (not its transform round trip) so eta = 0 is exact
    const double d0 = solve.D(0.0);
    if (d0 <= tol) return {input, 0.0, 0, d0, false, false};

    // bracket for the bisection safeguard: D(0) > 0, find eta_hi with D <= 0
    double eta_lo = 0.0;
    double eta_hi = tau;
    const double cap = cfg.bracket_cap_factor * tau;
    double d_hi = solve.D(eta_hi);
    while (d_hi > 0.0 && eta_hi < cap) {
        eta_lo = eta_hi;
        eta_hi *= 2.0;
        d_hi = solve.D(eta_hi);
    }
    if (d_hi > 0.0) {
        // On stiff inputs the -eta f term re-inflates D before eta reaches
        // tau, so the whole dissipative window can sit below the step size.
        // Rescan by halving, and bracket from 0 so the search homes in on
        // the first crossing rather than the far edge of the window.
        eta_lo = 0.0;
        eta_hi = tau;
        for (int j = 0; j < 60 && d_hi > 0.0; ++j) {
            eta_hi *= 0.5;
            d_hi = solve.D(eta_hi);
        }
        if (d_hi > 0.0) {
            std::ostringstream os;
            os << "energy corrector found no dissipative eta in [" << eta_hi
               << ", " << cap << "] (D(0)=" << d0 << ")";
            throw CorrectorFailure(os.str());
        }
    }

    // Newton from 0 with the analytic derivative, guarded by the bracket
    double eta = 0.0, d = d0;
    int iters = 0;
    bool used_bisection = false;
    while (std::abs(d) > tol && iters < cfg.max_newton) {
        const double dp = solve.D_prime(eta);
        double next = (std::isfinite(dp) && dp != 0.0) ? eta - d / dp : -1.0;
        if (!(next > eta_lo) || !(next < eta_hi)) {
            next = 0.5 * (eta_lo + eta_hi); // fall back to bisection on the bracket
            used_bisection = true;
        }
        eta = next;
        d = solve.D(eta);
        ++iters;
        if (d > 0.0)
            eta_lo = eta;
        else
            eta_hi = eta;
        if (eta_hi - eta_lo <= 1e-17 * eta_hi) break; // bracket exhausted
    }
    return {solve.phi_star(eta), eta, iters, d, false, used_bisection};
}

double energy_project_bisection_eta(const FlowSpec& flow, const Field& phi_n,
                                    const Field& input, double tau,
                                    const EnergyCorrectorConfig& cfg) {
    ProjectionSolve solve(flow, cfg.form, phi_n, input);
    if (solve.D(0.0) <= 0.0) return 0.0;
    double lo = 0.0, hi = tau;
    const double cap = cfg.bracket_cap_factor * tau;
    double d_hi = solve.D(hi);
    while (d_hi > 0.0 && hi < cap) {
        lo = hi;
        hi *= 2.0;
        d_hi = solve.D(hi);
    }
    if (d_hi > 0.0) {
        // same two-direction hunt as the Newton route: the dissipative
        // window may sit entirely below tau
        lo = 0.0;
        hi = tau;
        for (int j = 0; j < 60 && d_hi > 0.0; ++j) {
            hi *= 0.5;
            d_hi = solve.D(hi);
        }
        if (d_hi > 0.0)
            throw CorrectorFailure("bisection oracle: no bracket in either direction");
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-16 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (solve.D(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double cutoff_scalar(double v, double b) { return std::clamp(v, -b, b); }

BoundProjectResult bound_project(const PotentialModel& model, const Field& input,
                                 const BoundCorrectorConfig& cfg) {
    const double b = model.bound();
    const std::size_t n = input.size();
    std::vector<double> phi(n), lam(n);
    double lam_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = input[i];
        if (v > b) {
            phi[i] = b;
            lam[i] = (v - b) / (2.0 * b);
        } else if (v < -b) {
            phi[i] = -b;
            lam[i] = (-b - v) / (2.0 * b);
        } else {
            phi[i] = v;
            lam[i] = 0.0;
        }
        lam_max = std::max(lam_max, lam[i]);
    }

    Field out(input.grid_ptr(), std::move(phi));
    if (cfg.enforce_projection_energy)
        out = apply_map_projected(input, [b](double v) { return cutoff_scalar(v, b); });

    // complementarity residual max |lambda_j * p(phi_j)|, p(v) = -(v+b)(v-b);
    // exact zero for the pure cutoff, reported honestly after P_h
    double max_lp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = out[i];
        const double p = -(v + b) * (v - b);
        max_lp = std::max(max_lp, std::abs(lam[i] * p));
    }
    return {std::move(out), Field(input.grid_ptr(), std::move(lam)), lam_max, max_lp};
}

} // namespace gfpc

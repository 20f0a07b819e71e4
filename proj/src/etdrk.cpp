#include "gfpc/etdrk.hpp"

#include <cmath>
#include <stdexcept>

#include "gfpc/errors.hpp"
#include "gfpc/phi_functions.hpp"
#include "gfpc/spectral.hpp"

namespace gfpc {

EtdrkStepper::EtdrkStepper(GridPtr grid, const ExponentialTableau& tableau,
                           const FlowSpec& flow, double tau, PredictorForm form)
    : grid_(std::move(grid)), tableau_(tableau), flow_(flow), tau_(tau), form_(form) {
    if (!(tau > 0)) throw std::invalid_argument("etdrk: tau must be positive");
    const std::size_t n = grid_->size();
    const int s = tableau_.stages;

    g_symbol_.resize(n);
    l_symbol_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k2 = grid_->k_squared(i);
        g_symbol_[i] = flow_.mobility == Mobility::AllenCahn ? 1.0 : k2;
        l_symbol_[i] = k2 + flow_.stabilizer;
    }

    // per-mode coefficients at z = -tau * G * L, evaluated once
    chi_.assign(s + 1, std::vector<double>(n));
    a_.assign(s, {});
    for (int i = 2; i <= s; ++i) a_[i - 1].assign(i - 1, std::vector<double>(n));
    b_.assign(s, std::vector<double>(n));

    for (std::size_t m = 0; m < n; ++m) {
        const double z = -tau_ * g_symbol_[m] * l_symbol_[m];
        for (int i = 1; i <= s; ++i) chi_[i - 1][m] = std::exp(tableau_.c[i - 1] * z);
        chi_[s][m] = std::exp(z);
        for (int i = 2; i <= s; ++i)
            for (int j = 1; j < i; ++j)
                a_[i - 1][j - 1][m] = tau_ * tableau_.coeff_a(i, j, z) * g_symbol_[m];
        for (int j = 1; j <= s; ++j)
            b_[j - 1][m] = tau_ * tableau_.coeff_b(j, z) * g_symbol_[m];
    }
}

Field EtdrkStepper::step(const Field& phi, int step_index) const {
    if (phi.grid() != *grid_) throw std::invalid_argument("etdrk step: grid mismatch");
    const std::size_t n = grid_->size();
    const int s = tableau_.stages;

    const Coefficients phi_hat = transform_forward(phi);

    auto g_hat_of = [&](const Field& u) {
        std::vector<double> gv(n);
        for (std::size_t i = 0; i < n; ++i) gv[i] = flow_.g(u[i]);
        return transform_forward(Field(grid_, std::move(gv)));
    };

    std::vector<Coefficients> g_hats;
    g_hats.reserve(s);
    g_hats.push_back(g_hat_of(phi));

    auto combine = [&](const std::vector<double>& chi_row,
                       const std::vector<const std::vector<double>*>& weights,
                       int n_weights) {
        Coefficients out(n);
        if (form_ == PredictorForm::Exponential) {
            for (std::size_t m = 0; m < n; ++m) {
                std::complex<double> acc = chi_row[m] * phi_hat[m];
                for (int j = 0; j < n_weights; ++j) acc += (*weights[j])[m] * g_hats[j][m];
                out[m] = acc;
            }
        } else {
            // stabilized difference form: u_n + sum w_j (g_hat_j - L u_n_hat);
            // identical to the exponential form when the tableau is consistent
            for (std::size_t m = 0; m < n; ++m) {
                std::complex<double> acc = phi_hat[m];
                for (int j = 0; j < n_weights; ++j)
                    acc += (*weights[j])[m] * (g_hats[j][m] - l_symbol_[m] * phi_hat[m]);
                out[m] = acc;
            }
        }
        return out;
    };

    for (int i = 2; i <= s; ++i) {
        std::vector<const std::vector<double>*> w;
        for (int j = 1; j < i; ++j) w.push_back(&a_[i - 1][j - 1]);
        Field stage = transform_inverse(grid_, combine(chi_[i - 1], w, i - 1));
        if (!stage.all_finite())
            throw BlowUpError("predictor stage went non-finite", step_index, i);
        g_hats.push_back(g_hat_of(stage));
    }

    std::vector<const std::vector<double>*> w;
    for (int j = 1; j <= s; ++j) w.push_back(&b_[j - 1]);
    Field result = transform_inverse(grid_, combine(chi_[s], w, s));
    if (!result.all_finite())
        throw BlowUpError("predictor step went non-finite", step_index, s + 1);
    return result;
}

} // namespace gfpc

#pragma once

#include <memory>
#include <vector>

#include "gfpc/field.hpp"
#include "gfpc/potential.hpp"
#include "gfpc/tableau.hpp"

namespace gfpc {

enum class PredictorForm {
    Exponential, ///< stages via e^{c_i z} u_n + tau sum a_{i,j} G g_j
    Stabilized   ///< stages via u_n + tau sum a_{i,j} (G g_j - G L u_n)
};

/// One exponential predictor step for a fixed (grid, tableau, flow, tau).
/// All per-mode coefficient arrays are evaluated once at construction and
/// reused, so repeated steps cost only the stage transforms.
class EtdrkStepper {
public:
    EtdrkStepper(GridPtr grid, const ExponentialTableau& tableau, const FlowSpec& flow,
                 double tau, PredictorForm form = PredictorForm::Exponential);

    /// Advance one step. Throws BlowUpError if a stage goes non-finite;
    /// step_index only labels that error.
    Field step(const Field& phi, int step_index = -1) const;

    double tau() const { return tau_; }
    const ExponentialTableau& tableau() const { return tableau_; }
    const FlowSpec& flow() const { return flow_; }
    const GridPtr& grid() const { return grid_; }
    PredictorForm form() const { return form_; }

private:
    GridPtr grid_;
    ExponentialTableau tableau_;
    FlowSpec flow_;
    double tau_;
    PredictorForm form_;

    std::vector<double> g_symbol_;  // mobility symbol per bin
    std::vector<double> l_symbol_;  // |k|^2 + S per bin
    std::vector<std::vector<double>> chi_;          // e^{c_i z}, i = 1..s, plus final at [s]
    std::vector<std::vector<std::vector<double>>> a_; // tau * a_{i,j}(z) * G per bin
    std::vector<std::vector<double>> b_;              // tau * b_j(z) * G per bin
};

} // namespace gfpc

#pragma once

#include "gfpc/field.hpp"
#include "gfpc/potential.hpp"

namespace gfpc {

enum class EnergyForm {
    InterpolationSpectral, ///< 1/2 |grad I_h phi|^2 + h^d sum F(phi_j)
    ProjectionSpectral,    ///< same quadrature with the field read as P_h-truncated data
    FiniteDifference       ///< h^d sum (1/2 |forward differences|^2 + F), dim <= 2
};

EnergyForm energy_form_from_name(const std::string& name);
const char* energy_form_name(EnergyForm form);

/// Discrete free energy of a nodal field under the chosen form.
double energy(const FlowSpec& flow, EnergyForm form, const Field& phi);

/// Spectral variational derivative mu = -Lap phi + f(phi) (the gradient of the
/// spectral energy forms in the h^d-weighted inner product).
Field variational_derivative(const FlowSpec& flow, const Field& phi);

/// Form-consistent gradient: spectral forms use the spectral Laplacian, the
/// finite-difference form uses the second-difference Laplacian.
Field variational_derivative(const FlowSpec& flow, EnergyForm form, const Field& phi);

} // namespace gfpc

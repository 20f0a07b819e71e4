#pragma once

#include <array>
#include <functional>

#include "gfpc/field.hpp"
#include "gfpc/grid.hpp"

namespace gfpc {

/// Forward DFT with 1/M^d normalization: u~_l = (1/M^d) sum_j u_j e^{-i l.x_j'}
/// where x' is the node offset from the box corner. Coefficients come back in
/// bin order (x fastest, same layout as nodal storage). If the field carries a
/// coefficient cache, that is returned directly.
Coefficients transform_forward(const Field& f);

/// Unnormalized synthesis sum; returns the real part and attaches the
/// coefficients to the resulting field. Throws if the imaginary residue
/// exceeds 1e-8 relative to the field magnitude (inputs are expected to be
/// conjugate-symmetric up to round-off).
Field transform_inverse(const GridPtr& grid, const Coefficients& coeffs);

/// Same, reporting max|imag| / max(1, max|value|) instead of only checking it.
Field transform_inverse_residue(const GridPtr& grid, const Coefficients& coeffs,
                                double* residue);

/// Diagonal Fourier-space operator: one real scalar per spectral bin.
class FourierMultiplier {
public:
    /// symbol receives the physical wavenumber vector (k_x, k_y, k_z) of a bin.
    static FourierMultiplier from_symbol(
        GridPtr grid, const std::function<double(const std::array<double, 3>&)>& symbol);

    static FourierMultiplier identity(GridPtr grid);
    /// Symbol |k|^2 (so this is the operator -Laplacian).
    static FourierMultiplier neg_laplacian(GridPtr grid);
    /// Symbol 1/(1 + eta |k|^2), i.e. (I - eta*Laplacian)^{-1}. Requires eta >= 0.
    static FourierMultiplier helmholtz_inverse(GridPtr grid, double eta);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    /// Pointwise product = operator composition (diagonal operators commute).
    FourierMultiplier compose(const FourierMultiplier& o) const;

private:
    FourierMultiplier(GridPtr grid, std::vector<double> values);
    GridPtr grid_;
    std::vector<double> values_;
};

/// inverse . (m x forward): applies the diagonal operator to a real field.
Field apply_multiplier(const FourierMultiplier& m, const Field& f);

enum class ProjectionTarget {
    Interpolation, ///< I_h: nodal identity (the field already interpolates its nodes)
    Projection     ///< P_h: truncation to the grid's mode set; identity for nodal data
};

/// For nodal data both targets return the field unchanged (its trigonometric
/// content already lies inside the grid's mode set); kept explicit so callers
/// state which reading of the field they rely on.
Field project_interpolate(const Field& f, ProjectionTarget target);

/// P_h of a pointwise map of the field's interpolant: upsample spectrally to a
/// 2x finer grid, apply the map at the fine nodes, truncate back to the
/// original mode set. The Nyquist mode is split cosine-style across +-M/2 on
/// the fine grid so the upsampled field stays real.
Field apply_map_projected(const Field& f, const std::function<double(double)>& map);

/// Exact spectral upsampling of a field onto a grid with twice the modes per
/// axis (same box). Exposed for tests.
Field upsample_twice(const Field& f);

} // namespace gfpc

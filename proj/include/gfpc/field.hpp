#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "gfpc/grid.hpp"

namespace gfpc {

using Coefficients = std::vector<std::complex<double>>;

/// Real nodal field over a Grid. Immutable once constructed; operations
/// return new fields. Producers that already know the field's spectral
/// coefficients attach them so a later forward transform is free.
class Field {
public:
    Field(GridPtr grid, std::vector<double> values);
    Field(GridPtr grid, std::vector<double> values, Coefficients coeffs);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    double min() const;
    double max() const;
    double max_abs() const;
    /// Average of nodal values (= mean of the interpolant over the box).
    double mean() const;
    bool all_finite() const;

    bool has_coefficients() const { return coeffs_ != nullptr; }
    const Coefficients& coefficients() const { return *coeffs_; }

private:
    GridPtr grid_;
    std::vector<double> values_;
    std::shared_ptr<const Coefficients> coeffs_; // optional cache
};

/// Discrete L2 norm: sqrt(h^d * sum v_j^2).
double l2_norm(const Field& f);
double l2_error(const Field& a, const Field& b);

} // namespace gfpc

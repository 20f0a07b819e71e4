#pragma once

#include <array>
#include <cstddef>
#include <memory>

namespace gfpc {

/// Uniform periodic grid on a rectangular box, 1 to 3 dimensions.
/// Nodes along axis a are x_j = lo[a] + j*h[a], j = 0..m[a]-1.
/// Linear storage is row-major with x fastest:
///   flat = ix + m[0]*(iy + m[1]*iz).
/// Spectral bins use the same layout; bin index b on an axis maps to the
/// integer mode l = b < m/2 ? b : b - m, so l runs over [-m/2, m/2-1].
class Grid {
public:
    Grid(int dim, std::array<int, 3> modes, std::array<double, 3> lo,
         std::array<double, 3> hi);

    int dim() const { return dim_; }
    int modes(int axis) const { return m_[axis]; }
    double lo(int axis) const { return lo_[axis]; }
    double hi(int axis) const { return hi_[axis]; }
    double spacing(int axis) const { return h_[axis]; }
    double length(int axis) const { return hi_[axis] - lo_[axis]; }

    std::size_t size() const { return size_; }
    double cell_volume() const { return cell_volume_; }
    double volume() const { return volume_; }

    double node(int axis, int idx) const { return lo_[axis] + h_[axis] * idx; }

    /// Integer mode for a bin index on one axis.
    int mode(int axis, int bin) const {
        return bin < m_[axis] / 2 ? bin : bin - m_[axis];
    }
    /// Physical wavenumber 2*pi*l/L for a bin index on one axis.
    double wavenumber(int axis, int bin) const {
        return two_pi_over_len_[axis] * mode(axis, bin);
    }
    /// |k|^2 of a flat bin index.
    double k_squared(std::size_t flat) const;

    /// Decompose a flat index into per-axis indices (unused axes give 0).
    std::array<int, 3> unflatten(std::size_t flat) const;
    std::size_t flatten(int ix, int iy = 0, int iz = 0) const {
        return static_cast<std::size_t>(ix) +
               static_cast<std::size_t>(m_[0]) *
                   (static_cast<std::size_t>(iy) +
                    static_cast<std::size_t>(m_[1]) * static_cast<std::size_t>(iz));
    }

    bool operator==(const Grid& o) const;
    bool operator!=(const Grid& o) const { return !(*this == o); }

private:
    int dim_;
    std::array<int, 3> m_;
    std::array<double, 3> lo_, hi_, h_, two_pi_over_len_;
    std::size_t size_;
    double cell_volume_, volume_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int dim, std::array<int, 3> modes, std::array<double, 3> lo,
                  std::array<double, 3> hi);

/// Convenience: cube [lo,hi]^dim with m modes per axis.
GridPtr make_cube_grid(int dim, int m, double lo, double hi);

} // namespace gfpc

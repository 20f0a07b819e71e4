#include "gfpc/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gfpc {

Grid::Grid(int dim, std::array<int, 3> modes, std::array<double, 3> lo,
           std::array<double, 3> hi)
    : dim_(dim), m_(modes), lo_(lo), hi_(hi) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("grid dim must be 1, 2, or 3");
    size_ = 1;
    cell_volume_ = 1.0;
    volume_ = 1.0;
    for (int a = 0; a < 3; ++a) {
        if (a >= dim) {
            m_[a] = 1;
            lo_[a] = 0.0;
            hi_[a] = 1.0;
            h_[a] = 1.0;
            two_pi_over_len_[a] = 0.0;
            continue;
        }
        if (m_[a] < 4 || m_[a] % 2 != 0)
            throw std::invalid_argument("modes per axis must be even and >= 4");
        if (!(hi_[a] > lo_[a]))
            throw std::invalid_argument("grid extents must satisfy hi > lo");
        const double len = hi_[a] - lo_[a];
        h_[a] = len / m_[a];
        two_pi_over_len_[a] = 2.0 * M_PI / len;
        size_ *= static_cast<std::size_t>(m_[a]);
        cell_volume_ *= h_[a];
        volume_ *= len;
    }
}

double Grid::k_squared(std::size_t flat) const {
    const auto idx = unflatten(flat);
    double s = 0.0;
    for (int a = 0; a < dim_; ++a) {
        const double k = wavenumber(a, idx[a]);
        s += k * k;
    }
    return s;
}

std::array<int, 3> Grid::unflatten(std::size_t flat) const {
    const auto mx = static_cast<std::size_t>(m_[0]);
    const auto my = static_cast<std::size_t>(m_[1]);
    std::array<int, 3> idx{};
    idx[0] = static_cast<int>(flat % mx);
    idx[1] = static_cast<int>((flat / mx) % my);
    idx[2] = static_cast<int>(flat / (mx * my));
    return idx;
}

bool Grid::operator==(const Grid& o) const {
    return dim_ == o.dim_ && m_ == o.m_ && lo_ == o.lo_ && hi_ == o.hi_;
}

GridPtr make_grid(int dim, std::array<int, 3> modes, std::array<double, 3> lo,
                  std::array<double, 3> hi) {
    return std::make_shared<const Grid>(dim, modes, lo, hi);
}

GridPtr make_cube_grid(int dim, int m, double lo, double hi) {
    return make_grid(dim, {m, m, m}, {lo, lo, lo}, {hi, hi, hi});
}

} // namespace gfpc

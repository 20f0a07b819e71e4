#include "gfpc/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gfpc {
namespace {

// One cached FFTW plan pair per grid shape. FFTW_ESTIMATE keeps planning
// heuristic (no timing), so transforms are bit-reproducible across runs.
struct Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    std::size_t n = 0;
    std::mutex use;

    ~Plans() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
};

Plans& plans_for(const Grid& g) {
    static std::mutex registry_mutex;
    static std::map<std::array<int, 4>, std::unique_ptr<Plans>> registry;

    const std::array<int, 4> key{g.dim(), g.modes(0), g.modes(1), g.modes(2)};
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& p = registry[key];
    if (!p) {
        p = std::make_unique<Plans>();
        p->n = g.size();
        p->in = fftw_alloc_complex(p->n);
        p->out = fftw_alloc_complex(p->n);
        if (!p->in || !p->out) throw std::bad_alloc();
        // storage is x-fastest, so FFTW (last-dimension-contiguous) sees the
        // axes reversed
        int dims[3];
        for (int i = 0; i < g.dim(); ++i) dims[i] = g.modes(g.dim() - 1 - i);
        p->fwd = fftw_plan_dft(g.dim(), dims, p->in, p->out, FFTW_FORWARD, FFTW_ESTIMATE);
        p->bwd = fftw_plan_dft(g.dim(), dims, p->in, p->out, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!p->fwd || !p->bwd) throw std::runtime_error("fftw planning failed");
    }
    return *p;
}

} // namespace

Coefficients transform_forward(const Field& f) {
    if (f.has_coefficients()) return f.coefficients();
    const Grid& g = f.grid();
    Plans& p = plans_for(g);
    std::lock_guard<std::mutex> lock(p.use);
    for (std::size_t i = 0; i < p.n; ++i) {
        p.in[i][0] = f[i];
        p.in[i][1] = 0.0;
    }
    fftw_execute(p.fwd);
    const double scale = 1.0 / static_cast<double>(p.n);
    Coefficients c(p.n);
    for (std::size_t i = 0; i < p.n; ++i)
        c[i] = {p.out[i][0] * scale, p.out[i][1] * scale};
    return c;
}

Field transform_inverse_residue(const GridPtr& grid, const Coefficients& coeffs,
                                double* residue) {
    if (coeffs.size() != grid->size())
        throw std::invalid_argument("transform_inverse: coefficient size mismatch");
    Plans& p = plans_for(*grid);
    std::vector<double> vals(p.n);
    double max_imag = 0.0, max_abs = 0.0;
    {
        std::lock_guard<std::mutex> lock(p.use);
        for (std::size_t i = 0; i < p.n; ++i) {
            p.in[i][0] = coeffs[i].real();
            p.in[i][1] = coeffs[i].imag();
        }
        fftw_execute(p.bwd);
        for (std::size_t i = 0; i < p.n; ++i) {
            vals[i] = p.out[i][0];
            max_imag = std::max(max_imag, std::abs(p.out[i][1]));
            max_abs = std::max(max_abs, std::hypot(p.out[i][0], p.out[i][1]));
        }
    }
    if (residue) *residue = max_imag / (max_abs + 1e-300);
    return Field(grid, std::move(vals), coeffs);
}

Field transform_inverse(const GridPtr& grid, const Coefficients& coeffs) {
    double residue = 0.0;
    Field f = transform_inverse_residue(grid, coeffs, &residue);
    if (residue > 1e-8)
        throw std::runtime_error("transform_inverse: non-real synthesis, residue " +
                                 std::to_string(residue));
    return f;
}

FourierMultiplier::FourierMultiplier(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {}

FourierMultiplier FourierMultiplier::from_symbol(
    GridPtr grid, const std::function<double(const std::array<double, 3>&)>& symbol) {
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto bins = grid->unflatten(i);
        std::array<double, 3> k{0.0, 0.0, 0.0};
        for (int a = 0; a < grid->dim(); ++a) k[a] = grid->wavenumber(a, bins[a]);
        v[i] = symbol(k);
        if (!std::isfinite(v[i]))
            throw std::invalid_argument("multiplier symbol produced a non-finite value");
    }
    return FourierMultiplier(std::move(grid), std::move(v));
}

FourierMultiplier FourierMultiplier::identity(GridPtr grid) {
    return FourierMultiplier(grid, std::vector<double>(grid->size(), 1.0));
}

FourierMultiplier FourierMultiplier::neg_laplacian(GridPtr grid) {
    return from_symbol(std::move(grid), [](const std::array<double, 3>& k) {
        return k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    });
}

FourierMultiplier FourierMultiplier::helmholtz_inverse(GridPtr grid, double eta) {
    if (!(eta >= 0.0)) throw std::invalid_argument("helmholtz_inverse: eta must be >= 0");
    return from_symbol(std::move(grid), [eta](const std::array<double, 3>& k) {
        return 1.0 / (1.0 + eta * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
    });
}

FourierMultiplier FourierMultiplier::compose(const FourierMultiplier& o) const {
    if (*grid_ != *o.grid_) throw std::invalid_argument("compose: grid mismatch");
    std::vector<double> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= o.values_[i];
    return FourierMultiplier(grid_, std::move(v));
}

Field apply_multiplier(const FourierMultiplier& m, const Field& f) {
    if (m.grid() != f.grid())
        throw std::invalid_argument("apply_multiplier: grid mismatch");
    Coefficients c = transform_forward(f);
    const auto& mv = m.values();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= mv[i];
    return transform_inverse(f.grid_ptr(), c);
}

Field project_interpolate(const Field& f, ProjectionTarget) {
    // Nodal data already lies inside the grid's mode set, so both the
    // interpolation reading and the truncation are the identity here.
    return f;
}

namespace {

/// Per-axis spreading of a coarse mode onto the 2x fine bin layout. A Nyquist
/// mode -M/2 splits cosine-style into fine modes +-M/2 with half weight.
void axis_targets(int m_coarse, int bin, int out_bins[2], double out_w[2], int* count) {
    const int fine_m = 2 * m_coarse;
    const int l = bin < m_coarse / 2 ? bin : bin - m_coarse;
    if (l == -m_coarse / 2) {
        out_bins[0] = fine_m - m_coarse / 2; // mode -M/2
        out_bins[1] = m_coarse / 2;          // mode +M/2
        out_w[0] = out_w[1] = 0.5;
        *count = 2;
    } else {
        out_bins[0] = l >= 0 ? l : l + fine_m;
        out_w[0] = 1.0;
        *count = 1;
    }
}

} // namespace

Field upsample_twice(const Field& f) {
    const Grid& g = f.grid();
    std::array<int, 3> fm{1, 1, 1};
    for (int a = 0; a < g.dim(); ++a) fm[a] = 2 * g.modes(a);
    GridPtr fine = make_grid(g.dim(), fm,
                             {g.lo(0), g.lo(1), g.lo(2)},
                             {g.hi(0), g.hi(1), g.hi(2)});

    const Coefficients coarse = transform_forward(f);
    Coefficients finec(fine->size(), {0.0, 0.0});

    for (std::size_t i = 0; i < coarse.size(); ++i) {
        const auto bins = g.unflatten(i);
        int tb[3][2];
        double tw[3][2];
        int tc[3] = {1, 1, 1};
        for (int a = 0; a < g.dim(); ++a)
            axis_targets(g.modes(a), bins[a], tb[a], tw[a], &tc[a]);
        for (int ix = 0; ix < tc[0]; ++ix)
            for (int iy = 0; iy < (g.dim() > 1 ? tc[1] : 1); ++iy)
                for (int iz = 0; iz < (g.dim() > 2 ? tc[2] : 1); ++iz) {
                    double w = tw[0][ix];
                    std::size_t fi = static_cast<std::size_t>(tb[0][ix]);
                    if (g.dim() > 1) {
                        w *= tw[1][iy];
                        fi += static_cast<std::size_t>(fine->modes(0)) * tb[1][iy];
                    }
                    if (g.dim() > 2) {
                        w *= tw[2][iz];
                        fi += static_cast<std::size_t>(fine->modes(0)) *
                              static_cast<std::size_t>(fine->modes(1)) * tb[2][iz];
                    }
                    finec[fi] += w * coarse[i];
                }
    }
    return transform_inverse(fine, finec);
}

Field apply_map_projected(const Field& f, const std::function<double(double)>& map) {
    const Grid& g = f.grid();
    Field fine = upsample_twice(f);

    std::vector<double> mapped(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i) mapped[i] = map(fine[i]);
    const Coefficients finec = transform_forward(Field(fine.grid_ptr(), std::move(mapped)));

    // truncate back: gather each coarse mode; Nyquist axes regroup +-M/2
    Coefficients coarse(g.size(), {0.0, 0.0});
    const Grid& fg = fine.grid();
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        const auto bins = g.unflatten(i);
        int tb[3][2];
        double tw[3][2];
        int tc[3] = {1, 1, 1};
        for (int a = 0; a < g.dim(); ++a)
            axis_targets(g.modes(a), bins[a], tb[a], tw[a], &tc[a]);
        std::complex<double> acc{0.0, 0.0};
        for (int ix = 0; ix < tc[0]; ++ix)
            for (int iy = 0; iy < (g.dim() > 1 ? tc[1] : 1); ++iy)
                for (int iz = 0; iz < (g.dim() > 2 ? tc[2] : 1); ++iz) {
                    std::size_t fi = static_cast<std::size_t>(tb[0][ix]);
                    if (g.dim() > 1)
                        fi += static_cast<std::size_t>(fg.modes(0)) * tb[1][iy];
                    if (g.dim() > 2)
                        fi += static_cast<std::size_t>(fg.modes(0)) *
                              static_cast<std::size_t>(fg.modes(1)) * tb[2][iz];
                    acc += finec[fi]; // gather weight 1: adjoint of the split
                }
        coarse[i] = acc;
    }
    return transform_inverse(f.grid_ptr(), coarse);
}

} // namespace gfpc

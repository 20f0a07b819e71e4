#include "gfpc/initial_data.hpp"

#include <cmath>
#include <stdexcept>

namespace gfpc {

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
    // SplitMix64 output at position `index` of stream `seed`
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    const double u = static_cast<double>(z >> 11) * 0x1.0p-53; // [0,1)
    return 2.0 * u - 1.0;
}

namespace {

double tanh_ball(double r, double d2, double eps) {
    return std::tanh((r - std::sqrt(d2)) / (std::sqrt(2.0) * eps));
}

} // namespace

Field initial_data(const ExperimentConfig& cfg, const GridPtr& grid) {
    const double eps = std::sqrt(cfg.eps2);
    const int dim = grid->dim();
    std::vector<double> v(grid->size());

    if (cfg.initial == "tanh-circle") {
        if (dim != 2) throw std::invalid_argument("tanh-circle needs a 2-D grid");
        const double cx = 0.5 * (grid->lo(0) + grid->hi(0));
        const double cy = 0.5 * (grid->lo(1) + grid->hi(1));
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto n = grid->unflatten(i);
            const double x = grid->node(0, n[0]) - cx;
            const double y = grid->node(1, n[1]) - cy;
            v[i] = std::tanh((1.0 - std::sqrt(x * x + y * y)) / (std::sqrt(2.0) * eps));
        }
    } else if (cfg.initial == "spheres") {
        if (dim != 3) throw std::invalid_argument("spheres needs a 3-D grid");
        const double q = M_PI / 4.0;
        const double amp = cfg.initial_amp; // 1 for the full profile, 1/2 for the scaled one
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto n = grid->unflatten(i);
            const double x = grid->node(0, n[0]);
            const double y = grid->node(1, n[1]);
            const double z = grid->node(2, n[2]);
            double s = tanh_ball(M_PI / 6, (x + q) * (x + q) + (y + q) * (y + q) + z * z, eps)
                     + tanh_ball(M_PI / 5, (x + q) * (x + q) + (y - q) * (y - q) + z * z, eps)
                     + tanh_ball(M_PI / 6, (x - q) * (x - q) + (y - q) * (y - q) + z * z, eps)
                     + tanh_ball(M_PI / 6,
                                 x * x + y * y + (z - M_PI / 3) * (z - M_PI / 3), eps);
            v[i] = amp * s;
        }
    } else if (cfg.initial == "random-uniform") {
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = cfg.initial_mean + cfg.initial_amp * counter_uniform(cfg.seed, i);
    } else if (cfg.initial == "cosine") {
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto n = grid->unflatten(i);
            v[i] = std::cos(grid->node(0, n[0]));
        }
    } else if (cfg.initial == "constant") {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = cfg.initial_mean;
    } else {
        throw std::invalid_argument("unknown initial data: " + cfg.initial);
    }
    return Field(grid, std::move(v));
}

FlowSpec flow_from_config(const ExperimentConfig& cfg) {
    FlowSpec flow;
    if (cfg.potential == "double-well")
        flow.potential = PotentialModel::double_well(cfg.beta, cfg.eps2);
    else if (cfg.potential == "flory-huggins")
        flow.potential = PotentialModel::flory_huggins(cfg.beta, cfg.eps2, cfg.theta0,
                                                       cfg.delta, cfg.delta_prime);
    else if (cfg.potential == "zero")
        flow.potential = PotentialModel::zero(cfg.beta);
    else
        throw std::invalid_argument("unknown potential: " + cfg.potential);

    if (cfg.mobility == "allen-cahn")
        flow.mobility = Mobility::AllenCahn;
    else if (cfg.mobility == "cahn-hilliard")
        flow.mobility = Mobility::CahnHilliard;
    else
        throw std::invalid_argument("unknown mobility: " + cfg.mobility);

    flow.stabilizer = cfg.effective_stabilizer();
    return flow;
}

GridPtr grid_from_config(const ExperimentConfig& cfg) {
    return make_grid(cfg.dim, cfg.modes, cfg.lo, cfg.hi);
}

} // namespace gfpc

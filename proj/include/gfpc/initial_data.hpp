#pragma once

#include <cstdint>

#include "gfpc/config.hpp"
#include "gfpc/field.hpp"
#include "gfpc/potential.hpp"

namespace gfpc {

/// Counter-based uniform(-1,1) stream: value i of a seed is a pure function
/// of (seed, i) via the SplitMix64 mixer, identical on every platform. Used
/// for seeded random initial data so equal seeds give bit-equal fields.
double counter_uniform(std::uint64_t seed, std::uint64_t index);

/// Build the configured initial field on the grid:
///   tanh-circle    tanh((1 - |x - c|)/(sqrt(2) eps)), c = box center
///   spheres        sum of four tanh spheres (radii pi/6, pi/5, pi/6, pi/6)
///   random-uniform mean + amp * uniform(-1,1) per node (counter-based)
///   cosine         cos(x) along the first axis
///   constant       initial_mean everywhere
Field initial_data(const ExperimentConfig& cfg, const GridPtr& grid);

/// Model assembled from config keys (potential, mobility, stabilizer).
FlowSpec flow_from_config(const ExperimentConfig& cfg);

GridPtr grid_from_config(const ExperimentConfig& cfg);

} // namespace gfpc

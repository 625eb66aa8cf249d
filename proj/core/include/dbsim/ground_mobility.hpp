#pragma once

#include <vector>

#include "dbsim/geometry.hpp"
#include "dbsim/rng.hpp"
#include "dbsim/world.hpp"

namespace dbsim {

/// Maps a point back into the region by reflecting each coordinate about the
/// violated boundary (x < 0 -> -x, x > L -> 2L - x), repeating if a step
/// overshoots past the opposite wall. Reflection keeps the random walk's
/// stationary distribution uniform; clamping would pile mass on the edges.
Point2D reflect_into(const Region& region, Point2D p);

/// One random-walk step: fixed length, uniform heading, reflected into the
/// region.
GroundNode node_step(const GroundNode& node, double step, const Region& region,
                     RngStream& rng);

/// Steps every node in ascending id order (fixed rng consumption order).
void step_all_nodes(std::vector<GroundNode>& nodes, double step,
                    const Region& region, RngStream& rng);

}  // namespace dbsim

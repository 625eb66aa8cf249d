#pragma once

#include <vector>

#include "dbsim/config.hpp"
#include "dbsim/geometry.hpp"
#include "dbsim/rng.hpp"

namespace dbsim {

/// A mobile user. Stays inside the region by boundary reflection.
struct GroundNode {
    int id = 0;
    Point2D pos;
};

/// A drone base station: position plus the per-drone memory the mobility
/// control carries across ticks. prev_pos is the revert target stored at the
/// start of each tick's movement; dest is the current waypoint; the three
/// counters track current, previous and personal-best connectivity.
struct DroneState {
    int id = 0;
    Point2D pos;
    Point2D prev_pos;
    Point2D dest;
    int m_current = 0;
    int m_prev = 0;
    int m_max = 0;
};

/// Mutable simulation state owned by the engine.
struct World {
    std::vector<GroundNode> nodes;
    std::vector<DroneState> drones;
};

/// Draws the initial world. Positions are i.i.d. uniform over the region in
/// a fixed draw order: every node (x then y, ascending id) first, then every
/// drone. Drones start with prev_pos = dest = pos, zero connectivity
/// counters and m_max = phi. Throws ValidationError for invalid configs.
World init_world(const SimConfig& config, RngStream& rng);

}  // namespace dbsim

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dbsim/world.hpp"

namespace dbsim {

/// Result of one node-to-drone association pass. A node is served by its
/// nearest drone (ties to the lowest drone id) if and only if that drone is
/// within the coverage radius; nodes covered by no drone stay unassigned and
/// count toward nobody.
struct Assignment {
    static constexpr std::int32_t kUnassigned = -1;

    /// Serving drone id per node id, or kUnassigned.
    std::vector<std::int32_t> node_to_drone;
    /// Per-drone connectivity count (the instantaneous M).
    std::vector<int> per_drone_count;
    /// Per-drone served node ids, ascending.
    std::vector<std::vector<int>> per_drone_members;

    int total_assigned() const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Exhaustive O(nodes x drones) association. Distances are compared squared,
/// so the radius gate is exact; a node exactly on the circle counts as
/// connected. Drone ids are taken to be their indices in `drones`.
Assignment associate(std::span<const GroundNode> nodes,
                     std::span<const DroneState> drones, double radius_r);

/// Bit-identical to associate() on every input; prunes candidate drones with
/// a uniform grid over the drones' bounding box. With cell_size >= radius_r
/// each node only inspects its 3x3 cell neighborhood, which is what makes
/// 10^4-node scenarios cheap. Any cell_size > 0 is correct: the scan window
/// widens to ceil(radius_r / cell_size) cells.
Assignment associate_grid(std::span<const GroundNode> nodes,
                          std::span<const DroneState> drones, double radius_r,
                          double cell_size);

}  // namespace dbsim

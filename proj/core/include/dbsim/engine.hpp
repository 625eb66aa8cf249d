#pragma once

#include <vector>

#include "dbsim/config.hpp"
#include "dbsim/geometry.hpp"
#include "dbsim/rng.hpp"
#include "dbsim/world.hpp"

namespace dbsim {

/// End-of-tick record: per-drone connectivity and position after any
/// reverts, which drones reverted, and how many pairs the overlap pass
/// adjusted.
struct TickTrace {
    int t = 0;
    std::vector<int> per_drone_m;
    std::vector<Point2D> per_drone_pos;
    std::vector<int> reverts;  ///< drone ids, ascending
    int separations = 0;

    friend bool operator==(const TickTrace&, const TickTrace&) = default;
};

/// Everything a finished run produced.
struct RunResult {
    SimConfig config;
    std::vector<TickTrace> traces;
    std::vector<DroneState> final_drones;
};

/// Executes one tick, in this exact order:
///   1. overlap separation between drones (feedback policy only; the random
///      walk baseline is uncoordinated by definition);
///   2. association snapshot used as planning input;
///   3. per drone, ascending id: store prev_pos, plan a waypoint, advance
///      one drone_speed step toward it;
///   4. all ground nodes take their random-walk step;
///   5. association recount: the tick's connectivity measurement;
///   6. on check ticks (t % check_interval == 0, feedback policy only):
///      drones whose count worsened per feedback_check revert to prev_pos,
///      bit-exactly;
///   7. if anyone reverted, one global recount after all reverts (a single
///      pass keeps the result independent of revert order);
///   8. per drone: personal best update, then m_prev = m_current.
/// The trace carries the end-of-tick values.
TickTrace tick(World& world, const SimConfig& config, RngStream& rng, int t);

/// init_world followed by t_max ticks. Pure function of the config: equal
/// configs (including seed) give byte-identical results.
RunResult run(const SimConfig& config);

}  // namespace dbsim

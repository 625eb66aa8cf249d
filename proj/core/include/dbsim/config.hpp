#pragma once

#include <cstdint>
#include <string_view>

namespace dbsim {

/// Drone mobility policy for a run.
enum class Policy { Feedback, RandomWalk };

std::string_view to_string(Policy policy);

/// Full parameterization of one simulation run. Defaults describe the
/// reference scenario: 15 drones serving 10^4 pedestrian-speed nodes in a
/// 1 km x 1 km region for 1000 ticks of one second each.
struct SimConfig {
    int n_d = 15;                   ///< number of drone base stations
    int n_g = 10000;                ///< number of ground nodes
    double side_l = 1000.0;         ///< region side length [m]
    double radius_r = 30.0;         ///< connectivity radius R [m]
    double radius_overlap = 60.0;   ///< minimum inter-drone distance R_o [m]
    int phi = 25;                   ///< connectivity threshold
    int loss = 5;                   ///< tolerated drop below the previous count
    double drone_speed = 5.0;       ///< drone step length [m/tick]
    double node_step = 1.0;         ///< ground-node step length [m/tick]; 0 freezes the nodes
    int t_max = 1000;               ///< run length [ticks]
    int check_interval = 1;         ///< ticks between feedback checks
    std::uint64_t seed = 0;         ///< PRNG seed; fully determines the run
    Policy policy = Policy::Feedback;

    /// Throws ValidationError naming the first violated invariant.
    void validate() const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

}  // namespace dbsim

#include "dbsim/world.hpp"

namespace dbsim {

World init_world(const SimConfig& config, RngStream& rng) {
    config.validate();

    World world;
    world.nodes.reserve(static_cast<std::size_t>(config.n_g));
    world.drones.reserve(static_cast<std::size_t>(config.n_d));

    // Draw order is part of the determinism contract: every node first
    // (x then y, ascending id), then every drone.
    for (int g = 0; g < config.n_g; ++g) {
        const double x = rng.uniform_in(config.side_l);
        const double y = rng.uniform_in(config.side_l);
        world.nodes.push_back({g, {x, y}});
    }
    for (int i = 0; i < config.n_d; ++i) {
        const double x = rng.uniform_in(config.side_l);
        const double y = rng.uniform_in(config.side_l);
        DroneState drone;
        drone.id = i;
        drone.pos = {x, y};
        drone.prev_pos = drone.pos;
        drone.dest = drone.pos;
        drone.m_current = 0;
        drone.m_prev = 0;
        drone.m_max = config.phi;
        world.drones.push_back(drone);
    }
    return world;
}

}  // namespace dbsim

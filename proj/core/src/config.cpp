#include "dbsim/config.hpp"

#include <cmath>
#include <string>

#include "dbsim/errors.hpp"

namespace dbsim {

std::string_view to_string(Policy policy) {
    return policy == Policy::Feedback ? "feedback" : "randomwalk";
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

}  // namespace

void SimConfig::validate() const {
    require(n_d >= 1, "n_d must be >= 1, got " + std::to_string(n_d));
    require(n_g >= 0, "n_g must be >= 0, got " + std::to_string(n_g));
    require(std::isfinite(side_l) && side_l > 0.0,
            "side_l must be a positive finite length");
    require(std::isfinite(radius_r) && radius_r > 0.0,
            "radius_r must be a positive finite length");
    require(std::isfinite(radius_overlap) && radius_overlap > 0.0,
            "radius_overlap must be a positive finite length");
    require(phi >= 0, "phi must be >= 0, got " + std::to_string(phi));
    require(loss >= 0, "loss must be >= 0, got " + std::to_string(loss));
    require(std::isfinite(drone_speed) && drone_speed > 0.0,
            "drone_speed must be a positive finite speed");
    // node_step 0 (frozen nodes) is allowed; it is useful for controlled runs
    require(std::isfinite(node_step) && node_step >= 0.0,
            "node_step must be a nonnegative finite speed");
    require(t_max >= 1, "t_max must be >= 1, got " + std::to_string(t_max));
    require(check_interval >= 1,
            "check_interval must be >= 1, got " + std::to_string(check_interval));
    require(radius_r <= side_l, "radius_r must not exceed side_l");
    // beyond the region diagonal no pair placement can satisfy the separation
    require(radius_overlap <= side_l * std::sqrt(2.0),
            "radius_overlap must not exceed side_l * sqrt(2)");
}

}  // namespace dbsim

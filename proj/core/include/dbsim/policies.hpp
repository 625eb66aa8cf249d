#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dbsim/geometry.hpp"
#include "dbsim/rng.hpp"
#include "dbsim/world.hpp"

namespace dbsim {

enum class PolicyAction { MoveTowardDest, Revert, Hold };

/// One drone's planning outcome for a tick. Planning never emits Revert;
/// reverts come only from the post-move feedback check.
struct PolicyDecision {
    std::optional<Point2D> new_dest;
    PolicyAction action = PolicyAction::Hold;
};

enum class FeedbackResult { Revert, Keep };

/// Pushes two drones apart along the line through both so that each ends up
/// radius_overlap / 2 from their midpoint; the resulting pair distance is
/// radius_overlap. Throws DegenerateCoincidence when the input distance is
/// below 1e-9 m (no direction to push along).
std::pair<Point2D, Point2D> separate_pair(Point2D pos_i, Point2D pos_j,
                                          double radius_overlap);

/// One pass over all drone pairs (i, j), i < j in lexicographic order:
/// every pair closer than radius_overlap is separated and clamped to the
/// region. Coincident pairs are first nudged apart by 1e-3 m in a random
/// direction. Returns the number of pairs adjusted. A later adjustment may
/// re-violate an earlier pair within the pass; the next tick corrects it.
int separate_all(std::vector<DroneState>& drones, double radius_overlap,
                 const Region& region, RngStream& rng);

/// Arithmetic mean of the member positions. Throws NoConnections on an
/// empty set.
Point2D compute_centroid(std::span<const Point2D> members);

/// Waypoint diagonally offset from the centroid by (+-R/2, +-R/2); p selects
/// the sign, shared by both coordinates, so the offset length is R/sqrt(2).
Point2D compute_destination(Point2D centroid, double radius_r, int p);

/// Plans one drone's waypoint: the connected-set centroid pushed outward by
/// a coin-flip diagonal when the drone serves anyone, otherwise an
/// exploration waypoint one `step` away in a uniform random direction (a
/// drone serving nobody has no centroid to steer by and would otherwise
/// never gain connections). Consumes exactly one draw either way.
PolicyDecision feedback_plan(const DroneState& drone,
                             std::span<const Point2D> members, double radius_r,
                             double step, RngStream& rng);

/// Revert rule: any drop while the previous count was above the threshold,
/// or a drop of more than `loss` below the previous count otherwise.
FeedbackResult feedback_check(int m_current, int m_prev, int phi, int loss);

/// Nondecreasing personal best. Callers initialize m_max at phi, which keeps
/// the floor invariant without re-checking here.
int update_personal_best(int m_max, int m_current, int phi);

/// Advances up to `step` meters along the straight line to dest, arriving
/// exactly when dest is within one step. The result is clamped to the region.
Point2D move_toward(Point2D pos, Point2D dest, double step,
                    const Region& region);

/// Baseline policy: waypoint one step away in a uniform random direction,
/// clamped to the region. Never reverts.
PolicyDecision random_walk_policy(const DroneState& drone, double step,
                                  const Region& region, RngStream& rng);

}  // namespace dbsim

#include "dbsim/association.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dbsim {

namespace {

// Per-axis cap on grid cells; beyond it cells just hold more drones each,
// which stays correct because lookups clamp into the grid.
constexpr long long kMaxCellsPerAxis = 4096;

Assignment make_empty(std::size_t n_nodes, std::size_t n_drones) {
    Assignment out;
    out.node_to_drone.assign(n_nodes, Assignment::kUnassigned);
    out.per_drone_count.assign(n_drones, 0);
    out.per_drone_members.assign(n_drones, {});
    return out;
}

void record(Assignment& out, int node_id, std::int32_t drone_id) {
    out.node_to_drone[static_cast<std::size_t>(node_id)] = drone_id;
    out.per_drone_count[static_cast<std::size_t>(drone_id)] += 1;
    out.per_drone_members[static_cast<std::size_t>(drone_id)].push_back(node_id);
}

}  // namespace

int Assignment::total_assigned() const {
    return std::accumulate(per_drone_count.begin(), per_drone_count.end(), 0);
}

Assignment associate(std::span<const GroundNode> nodes,
                     std::span<const DroneState> drones, double radius_r) {
    Assignment out = make_empty(nodes.size(), drones.size());
    if (drones.empty()) return out;

    const double r2 = radius_r * radius_r;
    for (const GroundNode& node : nodes) {
        double best_d2 = dist_squared(node.pos, drones[0].pos);
        std::int32_t best = 0;
        for (std::size_t i = 1; i < drones.size(); ++i) {
            const double d2 = dist_squared(node.pos, drones[i].pos);
            // strict < keeps the lowest id on ties
            if (d2 < best_d2) {
                best_d2 = d2;
                best = static_cast<std::int32_t>(i);
            }
        }
        if (best_d2 <= r2) record(out, node.id, best);
    }
    return out;
}

Assignment associate_grid(std::span<const GroundNode> nodes,
                          std::span<const DroneState> drones, double radius_r,
                          double cell_size) {
    Assignment out = make_empty(nodes.size(), drones.size());
    if (drones.empty()) return out;

    // Grid over the drones' bounding box. Out-of-box points clamp into the
    // border cells; clamping is monotone, so the reach bound below still
    // covers every drone within radius_r of a node.
    double min_x = drones[0].pos.x, max_x = drones[0].pos.x;
    double min_y = drones[0].pos.y, max_y = drones[0].pos.y;
    for (const DroneState& d : drones) {
        min_x = std::min(min_x, d.pos.x);
        max_x = std::max(max_x, d.pos.x);
        min_y = std::min(min_y, d.pos.y);
        max_y = std::max(max_y, d.pos.y);
    }

    const auto axis_cells = [cell_size](double span) {
        const long long n =
            static_cast<long long>(std::floor(span / cell_size)) + 1;
        return std::clamp(n, 1LL, kMaxCellsPerAxis);
    };
    const long long nx = axis_cells(max_x - min_x);
    const long long ny = axis_cells(max_y - min_y);

    const auto cell_index = [cell_size](double coord, double origin,
                                        long long cells) {
        const long long raw =
            static_cast<long long>(std::floor((coord - origin) / cell_size));
        return std::clamp(raw, 0LL, cells - 1);
    };

    std::vector<std::vector<std::int32_t>> cells(
        static_cast<std::size_t>(nx * ny));
    for (std::size_t i = 0; i < drones.size(); ++i) {
        const long long cx = cell_index(drones[i].pos.x, min_x, nx);
        const long long cy = cell_index(drones[i].pos.y, min_y, ny);
        cells[static_cast<std::size_t>(cy * nx + cx)].push_back(
            static_cast<std::int32_t>(i));
    }

    // Any drone within radius_r of a node is at most `reach` cells away.
    const long long reach = static_cast<long long>(
        std::min(std::ceil(radius_r / cell_size),
                 static_cast<double>(kMaxCellsPerAxis)));

    const double r2 = radius_r * radius_r;
    for (const GroundNode& node : nodes) {
        const long long cx = cell_index(node.pos.x, min_x, nx);
        const long long cy = cell_index(node.pos.y, min_y, ny);
        const long long x_lo = std::max(0LL, cx - reach);
        const long long x_hi = std::min(nx - 1, cx + reach);
        const long long y_lo = std::max(0LL, cy - reach);
        const long long y_hi = std::min(ny - 1, cy + reach);

        double best_d2 = 0.0;
        std::int32_t best = Assignment::kUnassigned;
        for (long long gy = y_lo; gy <= y_hi; ++gy) {
            for (long long gx = x_lo; gx <= x_hi; ++gx) {
                for (std::int32_t i :
                     cells[static_cast<std::size_t>(gy * nx + gx)]) {
                    const double d2 = dist_squared(
                        node.pos, drones[static_cast<std::size_t>(i)].pos);
                    // lexicographic (distance, id) minimum: identical winner
                    // to the exhaustive scan regardless of cell visit order
                    if (best == Assignment::kUnassigned || d2 < best_d2 ||
                        (d2 == best_d2 && i < best)) {
                        best_d2 = d2;
                        best = i;
                    }
                }
            }
        }
        if (best != Assignment::kUnassigned && best_d2 <= r2) {
            record(out, node.id, best);
        }
    }
    return out;
}

}  // namespace dbsim

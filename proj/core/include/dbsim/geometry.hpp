#pragma once

#include <algorithm>
#include <cmath>

namespace dbsim {

/// Planar position, in meters.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point2D&, const Point2D&) = default;
};

constexpr Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2D operator*(Point2D p, double s) { return {p.x * s, p.y * s}; }

constexpr double dist_squared(Point2D a, Point2D b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(Point2D a, Point2D b) { return std::sqrt(dist_squared(a, b)); }

inline bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// The square region of interest [0, side] x [0, side], origin at (0, 0).
struct Region {
    double side = 0.0;

    bool contains(Point2D p) const {
        return p.x >= 0.0 && p.x <= side && p.y >= 0.0 && p.y <= side;
    }

    /// Componentwise clamp onto the square.
    Point2D clamp(Point2D p) const {
        return {std::clamp(p.x, 0.0, side), std::clamp(p.y, 0.0, side)};
    }
};

}  // namespace dbsim

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "gripperforge/errors.hpp"

// Small planar-geometry toolkit: 2D vectors, convex polygon queries, and the
// origin-in-convex-hull test used by the force-closure decision.

namespace gripperforge::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

double dot(const Vec2& a, const Vec2& b);
double cross(const Vec2& a, const Vec2& b);
double norm(const Vec2& a);
Vec2 normalized(const Vec2& a);
Vec2 rotated(const Vec2& a, double angle_rad);

// Convex polygon given as a CCW vertex loop.
struct ConvexPolygon {
    std::vector<Vec2> vertices;

    // Throws DomainError unless there are >= 3 strictly convex CCW vertices.
    void validate() const;
    Vec2 centroid() const;
    // Extent of the polygon projected on a unit axis.
    double extent_along(const Vec2& unit_axis) const;
    // First boundary hit of the ray origin + t*dir, t > 0. The origin must be
    // strictly inside.
    Vec2 ray_boundary_intersection(const Vec2& origin, const Vec2& dir) const;
};

// A planar contact wrench: force (fx, fy) and torque about a reference point.
using Wrench = std::array<double, 3>;

// Clearance of the origin inside the convex hull of the given points:
// the minimum signed distance from the origin to any supporting plane,
// positive iff the origin is strictly interior. Returns a negative value for
// degenerate (rank-deficient) point sets. Brute force over candidate planes;
// intended for small point sets.
double origin_interior_margin(const std::vector<Wrench>& points);

} // namespace gripperforge::geom

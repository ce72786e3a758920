#include "gripperforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace gripperforge::geom {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

Vec2 normalized(const Vec2& a) {
    const double n = norm(a);
    if (n <= 0.0) {
        throw DomainError("normalized: zero-length vector");
    }
    return {a.x / n, a.y / n};
}

Vec2 rotated(const Vec2& a, double angle_rad) {
    const double c = std::cos(angle_rad);
    const double s = std::sin(angle_rad);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

void ConvexPolygon::validate() const {
    const std::size_t n = vertices.size();
    if (n < 3) {
        throw DomainError("ConvexPolygon: need at least 3 vertices, got " +
                          std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e1 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e2 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        const double l1 = norm(e1);
        const double l2 = norm(e2);
        if (l1 <= 0.0) {
            throw DomainError("ConvexPolygon: repeated vertex at index " +
                              std::to_string(i));
        }
        // CCW winding with strictly convex corners.
        if (cross(e1, e2) <= 1e-12 * l1 * l2) {
            throw DomainError("ConvexPolygon: not strictly convex CCW at vertex " +
                              std::to_string((i + 1) % n));
        }
    }
}

Vec2 ConvexPolygon::centroid() const {
    const std::size_t n = vertices.size();
    double area2 = 0.0;
    Vec2 acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        const double c = cross(a, b);
        area2 += c;
        acc.x += (a.x + b.x) * c;
        acc.y += (a.y + b.y) * c;
    }
    if (std::abs(area2) <= 0.0) {
        throw DomainError("ConvexPolygon: degenerate polygon has no centroid");
    }
    return {acc.x / (3.0 * area2), acc.y / (3.0 * area2)};
}

double ConvexPolygon::extent_along(const Vec2& unit_axis) const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Vec2& v : vertices) {
        const double p = dot(v, unit_axis);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return hi - lo;
}

Vec2 ConvexPolygon::ray_boundary_intersection(const Vec2& origin,
                                              const Vec2& dir) const {
    if (norm(dir) <= 0.0) {
        throw DomainError("ray_boundary_intersection: zero direction");
    }
    const std::size_t n = vertices.size();
    const double tol = 1e-12;
    double best_t = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2 e = vertices[(i + 1) % n] - a;
        const double denom = cross(dir, e);
        if (std::abs(denom) <= tol * norm(dir) * norm(e)) {
            continue; // ray parallel to this edge
        }
        const Vec2 w = a - origin;
        const double t = cross(w, e) / denom;
        const double u = cross(w, dir) / denom;
        if (t > tol && u >= -tol && u <= 1.0 + tol) {
            best_t = std::min(best_t, t);
        }
    }
    if (!std::isfinite(best_t)) {
        throw DomainError("ray_boundary_intersection: ray from (" +
                          num(origin.x) + ", " + num(origin.y) +
                          ") does not leave through the boundary");
    }
    return origin + dir * best_t;
}

double origin_interior_margin(const std::vector<Wrench>& points) {
    const std::size_t n = points.size();

    double scale = 0.0;
    for (const Wrench& p : points) {
        scale = std::max(scale,
                         std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]));
    }
    if (n < 4 || scale <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }

    // The clearance equals min over unit directions m of max_i m.p_i; for an
    // interior origin the minimum is attained at a facet normal, and every
    // facet normal is the normal of some point triplet. Sweeping all triplet
    // normals (both orientations) therefore yields the exact clearance when
    // the origin is inside, and a non-positive value otherwise.
    double margin = std::numeric_limits<double>::infinity();
    bool found = false;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            const Wrench u = {points[j][0] - points[i][0],
                              points[j][1] - points[i][1],
                              points[j][2] - points[i][2]};
            for (std::size_t k = j + 1; k < n; ++k) {
                const Wrench v = {points[k][0] - points[i][0],
                                  points[k][1] - points[i][1],
                                  points[k][2] - points[i][2]};
                Wrench m = {u[1] * v[2] - u[2] * v[1],
                            u[2] * v[0] - u[0] * v[2],
                            u[0] * v[1] - u[1] * v[0]};
                const double mn =
                    std::sqrt(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
                if (mn <= 1e-12 * scale * scale) {
                    continue; // collinear triplet
                }
                m = {m[0] / mn, m[1] / mn, m[2] / mn};

                double hi = -std::numeric_limits<double>::infinity();
                double lo = std::numeric_limits<double>::infinity();
                for (const Wrench& p : points) {
                    const double d = m[0] * p[0] + m[1] * p[1] + m[2] * p[2];
                    hi = std::max(hi, d);
                    lo = std::min(lo, d);
                }
                // support values for +m and -m
                margin = std::min(margin, std::min(hi, -lo));
                found = true;
            }
        }
    }
    if (!found) {
        return -std::numeric_limits<double>::infinity();
    }
    return margin;
}

} // namespace gripperforge::geom

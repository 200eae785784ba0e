#pragma once

#include <complex>
#include <span>
#include <vector>

namespace phm {

using Point = std::complex<double>;

/// Segments [p1,p2] and [q1,q2] share at least one point (touching counts).
bool segments_intersect(Point p1, Point p2, Point q1, Point q2);

/// Intersections between non-adjacent edges of the closed polygon through `pts`
/// (the closing edge back to pts[0] is implicit).
long count_self_intersections(std::span<const Point> pts);

/// Intersecting edge pairs between two closed polygons.
long count_crossings(std::span<const Point> a, std::span<const Point> b);

/// Edges of the closed polygon crossed by the ray origin + t e^{i angle}, t > 0.
/// Uses the half-open rule, so a ray through a vertex counts it once.
int ray_crossings(std::span<const Point> pts, Point origin, double angle);

/// Every closed-polygon turn has the same orientation, with cross products
/// allowed to dip to -tol (relative to the edge lengths) against it.
bool is_convex_polygon(std::span<const Point> pts, double tol = 1e-9);

}  // namespace phm

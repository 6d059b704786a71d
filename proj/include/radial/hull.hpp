#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "radial/geometry.hpp"

namespace radial {

enum class PointClass { StrictVertex, BoundaryNonVertex, Interior };

const char* to_string(PointClass c);

/// Convex hull of a planar point set: vertex indices in counterclockwise order.
struct Hull2 {
    std::vector<std::size_t> cycle;

    const std::vector<std::size_t>& vertex_indices() const { return cycle; }
};

struct Facet3 {
    std::array<std::size_t, 3> v{};  // counterclockwise seen from outside
    Point3 normal;                   // unit, outward
    double offset = 0.0;             // dot(normal, x) == offset on the facet plane
};

/// Triangulated convex hull of a spatial point set.
struct Hull3 {
    std::vector<std::size_t> vertices;  // sorted
    std::vector<Facet3> facets;

    const std::vector<std::size_t>& vertex_indices() const { return vertices; }
};

/// Throws TooFewPoints (< 3 points) or DegenerateHull (collinear input).
Hull2 convex_hull(std::span<const Point2> points, const Tolerance& tol = {});

/// Throws TooFewPoints (< 4 points) or DegenerateHull (coplanar input).
Hull3 convex_hull(std::span<const Point3> points, const Tolerance& tol = {});

struct Classification {
    std::vector<PointClass> classes;
    // Input spans a lower-dimensional affine hull; classes were computed inside it.
    bool degenerate = false;

    std::size_t count(PointClass c) const;
};

Classification classify_points(std::span<const Point2> points, const Tolerance& tol = {});
Classification classify_points(std::span<const Point3> points, const Tolerance& tol = {});

/// True iff the origin lies strictly inside the hull, by more than the
/// scaled tolerance from every edge or facet.
bool origin_interior(const Hull2& hull, std::span<const Point2> points, const Tolerance& tol = {});
bool origin_interior(const Hull3& hull, std::span<const Point3> points, const Tolerance& tol = {});

}  // namespace radial

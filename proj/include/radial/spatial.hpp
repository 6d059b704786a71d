#pragma once

#include <cstddef>
#include <vector>

#include "radial/geometry.hpp"
#include "radial/radii.hpp"
#include "radial/verify.hpp"

namespace radial {

enum class LayeredMode { PaperFaithful, Robust };

const char* to_string(LayeredMode m);

enum class SpatialConstruction { Tetrahedron, PolesAndPolygon, ConeGrid, OffsetSphere, SingleLayer };

const char* to_string(SpatialConstruction c);

/// Where one layer of equal radii sits. Points of the layer occupy vertex
/// indices [first, first + azimuths.size()).
struct LayerPlacement {
    double radius = 0.0;
    double z = 0.0;     // latitude plane
    double ring = 0.0;  // radius of the latitude circle; z^2 + ring^2 = radius^2
    std::vector<double> azimuths;
    std::size_t first = 0;
    bool bottom = false;
};

struct SpatialMeta {
    SpatialConstruction construction = SpatialConstruction::ConeGrid;
    LayeredMode mode = LayeredMode::Robust;
    Point3 apex;              // cone apex A on the z axis
    double half_angle = 0.0;  // cone half-angle at A
    double epsilon = 0.0;     // inflation of the outermost sphere
    double gamma = 0.0;       // bottom ring lift above the south pole of the smallest sphere
    std::size_t reference_layer = 0;
    double sphere_center_z = 0.0;  // offset sphere: centre (0, 0, z) and radius
    double sphere_radius = 0.0;
    std::vector<LayerPlacement> layers;  // cone grid and offset sphere, largest radius first
    bool strictified = false;
};

/// vertices[i] realises vertex_radii[i], which is input radius number
/// radius_assignment[i].
struct Configuration3D {
    std::vector<Point3> vertices;
    std::vector<double> vertex_radii;
    std::vector<std::size_t> radius_assignment;
    SpatialMeta meta;
};

VerificationReport verify(const Configuration3D& config, const Tolerance& tol = {});

/// Poles plus a strict planar polygon for n >= 5, a tetrahedron for n = 4.
/// Throws TooFewPoints or RadiiNotDistinct.
Configuration3D construct_distinct_3d(const RadiiSet& radii);

/// Cone grid over concentric spheres. PaperFaithful shares longitudes
/// between layers and may leave collinear points on a generator; Robust
/// gives every point its own generator and verifies to Pass. When the cone
/// is too thin for the tolerance, Robust puts every point on one sphere
/// offset from O instead (OffsetSphere).
/// Throws TooFewPoints, or DegenerateGrid when the grid cannot hold the
/// origin strictly inside.
Configuration3D construct_layered_3d(const RadiiSet& radii, LayeredMode mode);

/// Re-spreads the azimuths of a PaperFaithful grid so no two points share a
/// generator. Radii and latitudes are kept.
Configuration3D strictify_3d(const Configuration3D& config, const Tolerance& tol = {});

}  // namespace radial

#include "radial/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "radial/planar.hpp"

namespace radial {

const char* to_string(LayeredMode m)
{
    switch (m) {
    case LayeredMode::PaperFaithful: return "paper-faithful";
    case LayeredMode::Robust: return "robust";
    }
    return "unknown";
}

const char* to_string(SpatialConstruction c)
{
    switch (c) {
    case SpatialConstruction::Tetrahedron: return "tetrahedron";
    case SpatialConstruction::PolesAndPolygon: return "poles-and-polygon";
    case SpatialConstruction::ConeGrid: return "cone-grid";
    case SpatialConstruction::OffsetSphere: return "offset-sphere";
    case SpatialConstruction::SingleLayer: return "single-layer";
    }
    return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoldenFraction = 0.6180339887498949;  // 1 / golden ratio

Point3 on_sphere(double radius, double ring, double z, double azimuth)
{
    const Point3 p{ring * std::cos(azimuth), ring * std::sin(azimuth), z};
    return (radius / norm(p)) * p;
}

void add_vertex(Configuration3D& c, Point3 p, double r, std::size_t index)
{
    c.vertices.push_back(p);
    c.vertex_radii.push_back(r);
    c.radius_assignment.push_back(index);
}

// One vertex per radius of a single layer of size m >= 4: a regular
// tetrahedron, or the two poles and a regular polygon on the equator.
Configuration3D single_layer(const Layer& layer)
{
    Configuration3D c;
    c.meta.construction = SpatialConstruction::SingleLayer;
    const double r = layer.value;
    const std::size_t m = layer.multiplicity();
    if (m == 4) {
        const double s = r / std::sqrt(3.0);
        const Point3 corners[4] = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
        for (std::size_t i = 0; i < 4; ++i) add_vertex(c, corners[i], r, layer.members[i]);
        return c;
    }
    add_vertex(c, {0, 0, r}, r, layer.members[0]);
    add_vertex(c, {0, 0, -r}, r, layer.members[1]);
    const std::size_t ring = m - 2;
    for (std::size_t i = 0; i < ring; ++i) {
        const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(ring);
        add_vertex(c, {r * std::cos(a), r * std::sin(a), 0.0}, r, layer.members[i + 2]);
    }
    return c;
}

// Equally spaced slots 2 pi s / total, handed out in golden-ratio order so
// that every run of consecutive points is spread around the axis.
std::vector<double> golden_slots(std::size_t total)
{
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key = [](std::size_t q) {
        const double x = static_cast<double>(q) * kGoldenFraction;
        return x - std::floor(x);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    std::vector<double> azimuth(total);
    for (std::size_t slot = 0; slot < total; ++slot)
        azimuth[order[slot]] = 2.0 * kPi * static_cast<double>(slot) / static_cast<double>(total);
    return azimuth;
}

// Robust azimuths for the upper layers, in layer-major order.
void spread_upper(std::vector<LayerPlacement>& layers)
{
    std::size_t total = 0;
    for (const LayerPlacement& l : layers)
        if (!l.bottom) total += l.azimuths.size();
    const std::vector<double> slots = golden_slots(total);
    std::size_t q = 0;
    for (LayerPlacement& l : layers) {
        if (l.bottom) continue;
        for (double& a : l.azimuths) a = slots[q++];
    }
}

void place_layers(Configuration3D& c, const RadiiSet& radii)
{
    const auto& layers = radii.layers();
    c.vertices.clear();
    c.vertex_radii.clear();
    c.radius_assignment.clear();
    for (std::size_t j = 0; j < c.meta.layers.size(); ++j) {
        LayerPlacement& l = c.meta.layers[j];
        l.first = c.vertices.size();
        for (std::size_t i = 0; i < l.azimuths.size(); ++i) {
            const Point3 p = l.ring == 0.0 ? Point3{0, 0, l.z} : on_sphere(l.radius, l.ring, l.z, l.azimuths[i]);
            add_vertex(c, p, l.radius, layers[j].members[i]);
        }
    }
}

// Upper point of a single-point top layer goes to the north pole when it is
// the only upper point: an off-axis point alone cannot surround the axis.
void pole_if_alone(std::vector<LayerPlacement>& layers)
{
    std::size_t upper = 0;
    for (const LayerPlacement& l : layers)
        if (!l.bottom) upper += l.azimuths.size();
    if (upper != 1) return;
    LayerPlacement& top = layers.front();
    top.z = top.radius;
    top.ring = 0.0;
}

// Every point on one sphere about (0, 0, h) whose south pole is at distance s
// below O and north pole at distance N above, with s < r_min and r_max < N
// (a single-point extreme layer sits on the tangent pole instead). Each layer
// meets it in a latitude circle, and points on a sphere are always in
// strictly convex position. The choice keeps s * N strictly between r_min^2
// and r_max^2, so the smallest layer lies below O and the largest above.
Configuration3D offset_sphere(const RadiiSet& radii, LayeredMode mode)
{
    const auto& layers = radii.layers();
    const std::size_t k = layers.size();
    const double r_max = layers.front().value, r_min = layers.back().value;
    const bool top_pole = layers.front().multiplicity() == 1;
    const bool bottom_pole = layers.back().multiplicity() == 1;
    double s = 0.5 * r_min, north = 2.0 * r_max;
    if (top_pole && bottom_pole) {
        s = r_min;
        north = r_max;
    } else if (top_pole) {
        s = r_min * std::sqrt(r_min / r_max);
        north = r_max;
    } else if (bottom_pole) {
        s = r_min;
        north = r_max * std::sqrt(r_max / r_min);
    }
    const double h = 0.5 * (north - s);

    Configuration3D c;
    c.meta.construction = SpatialConstruction::OffsetSphere;
    c.meta.mode = mode;
    c.meta.sphere_center_z = h;
    c.meta.sphere_radius = 0.5 * (north + s);
    std::size_t middle = 0;
    for (std::size_t j = 1; j + 1 < k; ++j) middle += layers[j].multiplicity();
    const std::vector<double> slots = golden_slots(middle);
    std::size_t q = 0;
    for (std::size_t j = 0; j < k; ++j) {
        LayerPlacement l;
        l.radius = layers[j].value;
        l.bottom = j + 1 == k;
        const std::size_t m = layers[j].multiplicity();
        if (j == 0 && top_pole) {
            l.z = r_max;
        } else if (l.bottom && bottom_pole) {
            l.z = -r_min;
        } else {
            l.z = (l.radius * l.radius - s * north) / (2.0 * h);
            l.ring = std::sqrt(std::max(0.0, l.radius * l.radius - l.z * l.z));
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (j == 0 || l.bottom) {
                // Regular polygons around the axis close the top and the bottom.
                const double offset = l.bottom ? kPi / static_cast<double>(m) : 0.0;
                l.azimuths.push_back(offset + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(m));
            } else {
                l.azimuths.push_back(slots[q++]);
            }
        }
        c.meta.layers.push_back(std::move(l));
    }
    place_layers(c, radii);
    return c;
}

}  // namespace

VerificationReport verify(const Configuration3D& config, const Tolerance& tol)
{
    std::vector<std::size_t> identity(config.vertices.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return verify_configuration(config.vertices, RadiiSet(config.vertex_radii), tol, identity);
}

Configuration3D construct_distinct_3d(const RadiiSet& radii)
{
    const std::size_t n = radii.size();
    if (n < 4) throw Error(ErrorCode::TooFewPoints, "need at least 4 radii in space");
    if (!radii.all_distinct()) throw Error(ErrorCode::RadiiNotDistinct, "radii are not distinct");
    const auto& layers = radii.layers();

    Configuration3D c;
    if (n == 4) {
        // Apex on +z, the other three at polar angle 2 pi / 3 (widened if the
        // origin ends up outside) and azimuth gap 2 pi / 3.
        c.meta.construction = SpatialConstruction::Tetrahedron;
        double polar = 2.0 * kPi / 3.0;
        for (int attempt = 0; attempt < 60; ++attempt) {
            c.vertices.clear();
            c.vertex_radii.clear();
            c.radius_assignment.clear();
            add_vertex(c, {0, 0, layers[0].value}, layers[0].value, layers[0].members[0]);
            for (std::size_t i = 1; i < 4; ++i) {
                const double r = layers[i].value;
                const double a = 2.0 * kPi * static_cast<double>(i - 1) / 3.0;
                add_vertex(c,
                           {r * std::sin(polar) * std::cos(a), r * std::sin(polar) * std::sin(a),
                            r * std::cos(polar)},
                           r, layers[i].members[0]);
            }
            if (verify(c).origin_inside) break;
            polar = 0.5 * (polar + kPi);
        }
        return c;
    }

    c.meta.construction = SpatialConstruction::PolesAndPolygon;
    add_vertex(c, {0, 0, layers[0].value}, layers[0].value, layers[0].members[0]);
    add_vertex(c, {0, 0, -layers[1].value}, layers[1].value, layers[1].members[0]);
    std::vector<double> rest;
    std::vector<std::size_t> rest_index;
    for (std::size_t i = 2; i < n; ++i) {
        rest.push_back(layers[i].value);
        rest_index.push_back(layers[i].members[0]);
    }
    const Configuration2D flat = strictify_distinct_2d(construct_distinct_2d(RadiiSet(rest)));
    for (std::size_t i = 0; i < flat.vertices.size(); ++i)
        add_vertex(c, {flat.vertices[i].x, flat.vertices[i].y, 0.0}, flat.vertex_radii[i],
                   rest_index[flat.radius_assignment[i]]);
    return c;
}

Configuration3D construct_layered_3d(const RadiiSet& radii, LayeredMode mode)
{
    const std::size_t n = radii.size();
    if (n < 4) throw Error(ErrorCode::TooFewPoints, "need at least 4 radii in space");
    const auto& layers = radii.layers();
    const std::size_t k = layers.size();
    if (k == 1) {
        Configuration3D c = single_layer(layers[0]);
        c.meta.mode = mode;
        return c;
    }

    Configuration3D c;
    c.meta.construction = SpatialConstruction::ConeGrid;
    c.meta.mode = mode;
    const double r_top = layers[0].value;
    const double r_bottom = layers[k - 1].value;
    const double eps = 0.1 * r_top;
    const double r0 = r_top + eps;
    // Half the apex bound atan(R0 / r_k), capped so the generator line stays
    // closer to O than the smallest upper radius and so crosses every upper sphere.
    const double alpha = std::min(0.5 * std::atan(r0 / r_bottom),
                                  0.5 * std::asin(layers[k - 2].value / r0));
    c.meta.apex = {0, 0, r0};
    c.meta.half_angle = alpha;
    c.meta.epsilon = eps;

    std::size_t p = 0;
    for (std::size_t j = 0; j + 1 < k; ++j)
        if (layers[j].multiplicity() > layers[p].multiplicity()) p = j;
    c.meta.reference_layer = p;
    const std::size_t mp = layers[p].multiplicity();

    const double ca = std::cos(alpha), sa = std::sin(alpha);
    for (std::size_t j = 0; j + 1 < k; ++j) {
        LayerPlacement l;
        l.radius = layers[j].value;
        // First crossing of the generator A + t (sin a, 0, -cos a) with sphere j.
        const double t = r0 * ca - std::sqrt(l.radius * l.radius - r0 * r0 * sa * sa);
        l.z = r0 - t * ca;
        l.ring = t * sa;
        const std::size_t m = layers[j].multiplicity();
        // Longitudes i * mp / m of the reference table; index 0 is the shared generator.
        for (std::size_t i = 0; i < m; ++i)
            l.azimuths.push_back(2.0 * kPi * static_cast<double>(i * mp / m) / static_cast<double>(mp));
        c.meta.layers.push_back(std::move(l));
    }

    LayerPlacement bottom;
    bottom.bottom = true;
    bottom.radius = r_bottom;
    const std::size_t mk = layers[k - 1].multiplicity();
    if (mk == 1) {
        bottom.z = -r_bottom;
        bottom.ring = 0.0;
        bottom.azimuths = {0.0};
    } else {
        c.meta.gamma = 0.05 * r_bottom;
        bottom.z = -r_bottom + c.meta.gamma;
        bottom.ring = std::sqrt(r_bottom * r_bottom - bottom.z * bottom.z);
        for (std::size_t i = 0; i < mk; ++i)
            bottom.azimuths.push_back(2.0 * kPi * static_cast<double>(i) / static_cast<double>(mk));
    }
    c.meta.layers.push_back(std::move(bottom));

    if (mode == LayeredMode::Robust) {
        spread_upper(c.meta.layers);
        pole_if_alone(c.meta.layers);
        // Half a slot off the upper table; with two bottom points this keeps
        // them out of the plane of two upper points.
        std::size_t upper = n - mk;
        for (double& a : c.meta.layers.back().azimuths) a += kPi / static_cast<double>(upper);
    }
    place_layers(c, radii);

    const VerificationReport report = verify(c);
    if (mode == LayeredMode::PaperFaithful) {
        if (!report.origin_inside || report.degenerate)
            throw Error(ErrorCode::DegenerateGrid, "the cone grid does not hold the origin strictly inside");
        return c;
    }
    if (report.passed()) return c;
    Configuration3D sphere = offset_sphere(radii, mode);
    if (verify(sphere).passed()) return sphere;
    if (radii.all_distinct()) return construct_distinct_3d(radii);
    throw Error(ErrorCode::DegenerateGrid, "no layered placement is strictly convex at this tolerance");
}

Configuration3D strictify_3d(const Configuration3D& config, const Tolerance& tol)
{
    Configuration3D out = config;
    out.meta.strictified = true;
    if (config.meta.construction != SpatialConstruction::ConeGrid ||
        config.meta.mode == LayeredMode::Robust || verify(config, tol).passed())
        return out;

    std::vector<double> values(config.vertices.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[config.radius_assignment[i]] = config.vertex_radii[i];
    const RadiiSet radii(values);
    spread_upper(out.meta.layers);
    pole_if_alone(out.meta.layers);
    const std::size_t upper = config.vertices.size() - out.meta.layers.back().azimuths.size();
    for (double& a : out.meta.layers.back().azimuths) a += kPi / static_cast<double>(upper);
    place_layers(out, radii);
    const VerificationReport report = verify(out, tol);
    if (!report.passed())
        throw Error(ErrorCode::DegenerateGrid, "re-spread grid is still not strictly convex");
    return out;
}

}  // namespace radial

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "radial/planar.hpp"
#include "radial/slvd.hpp"
#include "radial/spatial.hpp"
#include "radial/verify.hpp"

namespace radial::io {

using Json = nlohmann::ordered_json;

Json to_json(Point2 p);
Json to_json(Point3 p);
Json to_json(const Tolerance& tol);
Json to_json(const VerificationReport& rep);
Json to_json(const PlanarMeta& meta);
Json to_json(const SpatialMeta& meta);
Json to_json(const EmptinessReport& rep);

/// {points, radii, radius_assignment, report, meta}.
Json configuration_document(const Configuration2D& c, const VerificationReport& rep);
Json configuration_document(const Configuration3D& c, const VerificationReport& rep);

/// Fixed-width indented JSON with a trailing newline.
std::string dump(const Json& doc);

/// Concentric circles for the distinct radii, the polygon and the origin,
/// on a 1000 x 1000 canvas scaled to the largest radius.
std::string to_svg(const Configuration2D& c);

/// Vertices and triangulated hull facets; vertices off the hull are kept so
/// indices match the configuration.
std::string to_off(const Configuration3D& c, const Tolerance& tol = {});

}  // namespace radial::io

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radial/hull.hpp"
#include "radial/radii.hpp"

namespace radial {

enum class Verdict { Pass, PassNonStrict, Fail };

enum class FailReason { None, Radius, Degenerate, InteriorPoint, Origin };

const char* to_string(Verdict v);
const char* to_string(FailReason r);

struct VerificationReport {
    std::vector<double> radius_residuals;  // relative: |(|v| - r)| / r
    std::vector<PointClass> classifications;
    bool degenerate = false;
    bool origin_inside = false;
    bool strict = false;  // no BoundaryNonVertex
    Verdict verdict = Verdict::Fail;
    FailReason reason = FailReason::None;

    double max_residual() const;
    bool passed() const { return verdict == Verdict::Pass; }
};

/// Checks points against the radii and the convex-configuration definition.
///
/// With an `assignment` (point i realises radius assignment[i]) residuals use
/// it directly; otherwise points and radii are paired in sorted order.
/// Throws LengthMismatch when the counts differ.
VerificationReport verify_configuration(std::span<const Point2> points, const RadiiSet& radii,
                                        const Tolerance& tol = {},
                                        std::span<const std::size_t> assignment = {});
VerificationReport verify_configuration(std::span<const Point3> points, const RadiiSet& radii,
                                        const Tolerance& tol = {},
                                        std::span<const std::size_t> assignment = {});

}  // namespace radial

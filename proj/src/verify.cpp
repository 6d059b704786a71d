#include "radial/verify.hpp"

#include <algorithm>
#include <numeric>

namespace radial {

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::PassNonStrict: return "PassNonStrict";
    case Verdict::Fail: return "Fail";
    }
    return "Unknown";
}

const char* to_string(FailReason r)
{
    switch (r) {
    case FailReason::None: return "none";
    case FailReason::Radius: return "radius";
    case FailReason::Degenerate: return "degenerate";
    case FailReason::InteriorPoint: return "interior-point";
    case FailReason::Origin: return "origin";
    }
    return "unknown";
}

double VerificationReport::max_residual() const
{
    double m = 0.0;
    for (double r : radius_residuals) m = std::max(m, r);
    return m;
}

namespace {

template <class P>
std::vector<double> residuals(std::span<const P> points, const RadiiSet& radii,
                              std::span<const std::size_t> assignment)
{
    std::vector<double> out(points.size());
    if (!assignment.empty()) {
        if (assignment.size() != points.size())
            throw Error(ErrorCode::LengthMismatch, "assignment length differs from point count");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (assignment[i] >= radii.size())
                throw Error(ErrorCode::LengthMismatch, "assignment index out of range");
            const double r = radii[assignment[i]];
            out[i] = std::abs(norm(points[i]) - r) / r;
        }
        return out;
    }
    std::vector<std::size_t> by_norm(points.size());
    std::iota(by_norm.begin(), by_norm.end(), std::size_t{0});
    std::stable_sort(by_norm.begin(), by_norm.end(), [&](std::size_t a, std::size_t b) {
        return norm(points[a]) < norm(points[b]);
    });
    std::vector<double> sorted = radii.values();
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < by_norm.size(); ++k) {
        const double r = sorted[k];
        out[by_norm[k]] = std::abs(norm(points[by_norm[k]]) - r) / r;
    }
    return out;
}

template <class P>
VerificationReport verify_impl(std::span<const P> points, const RadiiSet& radii,
                               const Tolerance& tol, std::span<const std::size_t> assignment)
{
    if (points.size() != radii.size())
        throw Error(ErrorCode::LengthMismatch, "got " + std::to_string(points.size()) +
                                                   " points for " + std::to_string(radii.size()) +
                                                   " radii");
    VerificationReport rep;
    rep.radius_residuals = residuals(points, radii, assignment);

    const Classification cls = classify_points(points, tol);
    rep.classifications = cls.classes;
    rep.degenerate = cls.degenerate;
    rep.strict = cls.count(PointClass::BoundaryNonVertex) == 0 &&
                 cls.count(PointClass::Interior) == 0;
    if (!cls.degenerate) rep.origin_inside = origin_interior(convex_hull(points, tol), points, tol);

    if (rep.max_residual() > tol.rel_eps)
        rep.reason = FailReason::Radius;
    else if (rep.degenerate)
        rep.reason = FailReason::Degenerate;
    else if (cls.count(PointClass::Interior) > 0)
        rep.reason = FailReason::InteriorPoint;
    else if (!rep.origin_inside)
        rep.reason = FailReason::Origin;

    if (rep.reason != FailReason::None)
        rep.verdict = Verdict::Fail;
    else
        rep.verdict = rep.strict ? Verdict::Pass : Verdict::PassNonStrict;
    return rep;
}

}  // namespace

VerificationReport verify_configuration(std::span<const Point2> points, const RadiiSet& radii,
                                        const Tolerance& tol,
                                        std::span<const std::size_t> assignment)
{
    return verify_impl(points, radii, tol, assignment);
}

VerificationReport verify_configuration(std::span<const Point3> points, const RadiiSet& radii,
                                        const Tolerance& tol,
                                        std::span<const std::size_t> assignment)
{
    return verify_impl(points, radii, tol, assignment);
}

}  // namespace radial
